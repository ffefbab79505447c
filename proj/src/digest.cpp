#include <pakforge/digest.hpp>

#include <pakforge/errors.hpp>

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

namespace pakforge::digest {

namespace {

struct CtxFree {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxFree>;

CtxPtr new_sha256_ctx() {
    CtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 context initialization failed");
    return ctx;
}

std::string finish_hex(EVP_MD_CTX* ctx) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> raw{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, raw.data(), &len) != 1)
        throw Error("SHA-256 finalization failed");

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[raw[i] >> 4];
        out += hex[raw[i] & 0x0f];
    }
    return out;
}

} // namespace

const std::string& algorithm() {
    static const std::string name = "sha256";
    return name;
}

std::string sha256_hex(std::string_view bytes) {
    auto ctx = new_sha256_ctx();
    if (EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1)
        throw Error("SHA-256 update failed");
    return finish_hex(ctx.get());
}

std::string sha256_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoFailure(file.string(), "cannot open for reading");

    auto ctx = new_sha256_ctx();
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        std::streamsize got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(got)) != 1)
            throw Error("SHA-256 update failed");
    }
    if (in.bad())
        throw IoFailure(file.string(), "read failed");
    return finish_hex(ctx.get());
}

} // namespace pakforge::digest
