#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "symfun/cache_io.hpp"
#include "symfun/character.hpp"
#include "symfun/plethysm.hpp"

using namespace symfun;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_SUITE("cache") {

TEST_CASE("save, load, and reuse") {
    TempFile tmp("symfun_cache_test.json");
    {
        ScopedMemo fresh;
        outer_mul(SymFn::s({2, 1}), SymFn::s({2, 1}));
        chi(Partition{3, 1}, Partition{2, 2});
        pleth_basis(Partition{2}, Partition{2});
        kron_product_expand(Partition{2, 1}, Partition{2, 1});
        CHECK(memo().lr_products.size() > 0);
        cache_save(memo(), tmp.path);
    }
    {
        ScopedMemo fresh;
        CacheInfo info = cache_load(memo(), tmp.path);
        CHECK(info.version == cache_format_version);
        CHECK(info.characters > 0);
        CHECK(info.lr_products > 0);
        CHECK(info.kron_products > 0);
        CHECK(info.pleth_basis > 0);
        // loaded entries are used as-is; recomputation gives identical values
        CHECK(outer_mul(SymFn::s({2, 1}), SymFn::s({2, 1})).coeff(Partition{3, 2, 1}) ==
              Rational(2));
        // loading twice is idempotent
        size_t before = memo().lr_products.size();
        cache_load(memo(), tmp.path);
        CHECK(memo().lr_products.size() == before);
    }
}

TEST_CASE("deterministic serialization") {
    TempFile a("symfun_cache_a.json"), b("symfun_cache_b.json");
    {
        ScopedMemo fresh;
        outer_mul(SymFn::s({2}), SymFn::s({1, 1}));
        cache_save(memo(), a.path);
        cache_save(memo(), b.path);
    }
    std::ifstream fa(a.path), fb(b.path);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK(!ca.empty());
}

TEST_CASE("missing file loads an empty cache") {
    ScopedMemo fresh;
    CacheInfo info = cache_load(memo(), "/nonexistent/path/symfun.json");
    CHECK(info.characters == 0);
    CHECK(memo().characters.size() == 0);
}

TEST_CASE("corrupted files are rejected untouched") {
    TempFile tmp("symfun_cache_corrupt.json");
    {
        ScopedMemo fresh;
        outer_mul(SymFn::s({2}), SymFn::s({2}));
        cache_save(memo(), tmp.path);
    }
    // truncate the file
    std::string text;
    {
        std::ifstream in(tmp.path);
        text.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << text.substr(0, text.size() / 2);
    }
    ScopedMemo fresh;
    CHECK_THROWS_AS(cache_load(memo(), tmp.path), IoError);
    CHECK(memo().lr_products.size() == 0);

    // flip a digit inside the payload: checksum mismatch
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        std::string bad = text;
        auto pos = bad.rfind("\"sections\"");
        pos = bad.find_first_of("0123456789", pos + 30);
        if (pos != std::string::npos)
            bad[pos] = bad[pos] == '9' ? '8' : '9';
        out << bad;
    }
    CHECK_THROWS_AS(cache_load(memo(), tmp.path), IoError);
    CHECK(memo().lr_products.size() == 0);

    // wrong version
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        std::string bad = text;
        auto pos = bad.find("\"version\":1");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 11, "\"version\":9");
        out << bad;
    }
    CHECK_THROWS_AS(cache_load(memo(), tmp.path), IoError);
}

} // TEST_SUITE
