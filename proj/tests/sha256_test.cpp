#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "lppie/sha256.hpp"

using namespace lppie;

namespace {

std::string hash_of(const std::string& text) {
    return sha256_hex(sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()),
                                                      text.size())));
}

} // namespace

TEST_CASE("FIPS 180-4 vectors") {
    CHECK(hash_of("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(hash_of("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(hash_of("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    CHECK(hash_of("A") == "559aead08264d5795d3909718cdd05abd49572e84fe55590eef31a88a08fdffd");
    CHECK(hash_of(std::string(1000000, 'a')) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("padding boundaries") {
    // Lengths around the 55/56/64-byte padding edges.
    for (size_t len : {54u, 55u, 56u, 57u, 63u, 64u, 65u, 119u, 120u, 128u}) {
        std::vector<uint8_t> data(len, 0x42);
        Sha256Digest d1 = sha256(data);
        Sha256Digest d2 = sha256(data);
        CHECK(d1 == d2);
        data[len / 2] ^= 1;
        CHECK(sha256(data) != d1);
    }
}
