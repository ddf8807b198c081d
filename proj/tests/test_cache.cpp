#include "doctest.h"

#include <fstream>
#include <iterator>

#include <unistd.h>
#include <zlib.h>

#include "cellkit/cache.hpp"

using namespace cellkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cellkit_cache_test_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<unsigned char> slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void dump(const fs::path& p, const std::vector<unsigned char>& bytes) {
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void reseal(std::vector<unsigned char>& bytes) {
    const size_t body = bytes.size() - 4;
    const auto crc = static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), bytes.data(), static_cast<uInt>(body)));
    for (int k = 0; k < 4; ++k) bytes[body + static_cast<size_t>(k)] = static_cast<unsigned char>(crc >> (8 * k));
}

}  // namespace

TEST_CASE("round trips") {
    TempDir dir;
    for (int n = 1; n <= 4; ++n) {
        const auto table = KLTable::build(n);
        const auto tensor = HTensor::compute(*table);
        const fs::path kf = cache_path(dir.path, CacheKind::kl_table, n);
        const fs::path hf = cache_path(dir.path, CacheKind::h_tensor, n);
        save_kl_table(kf, *table);
        save_h_tensor(hf, *tensor);
        CHECK(*load_kl_table(kf, n) == *table);
        CHECK(*load_h_tensor(hf, n) == *tensor);
        // Saving again gives the same bytes.
        const auto first = slurp(hf);
        save_h_tensor(hf, *load_h_tensor(hf, n));
        CHECK(slurp(hf) == first);
    }
    CHECK(cache_path("d", CacheKind::kl_table, 5) == fs::path("d") / "kl_n5.bin");
    CHECK(cache_path("d", CacheKind::h_tensor, 5) == fs::path("d") / "h_n5.bin");
}

TEST_CASE("damaged files are refused") {
    TempDir dir;
    const auto table = KLTable::build(4);
    const fs::path f = dir.path / "kl.bin";
    save_kl_table(f, *table);
    const auto good = slurp(f);

    SUBCASE("truncated") {
        dump(f, {good.begin(), good.begin() + static_cast<long>(good.size() / 2)});
        CHECK_THROWS_AS(load_kl_table(f, 4), CacheError);
    }
    SUBCASE("bit flip") {
        auto bad = good;
        bad[bad.size() / 2] ^= 0x10;
        CHECK_THROWS_WITH_AS(load_kl_table(f.string() + ".missing", 4), doctest::Contains("missing"), CacheError);
        dump(f, bad);
        CHECK_THROWS_WITH_AS(load_kl_table(f, 4), doctest::Contains("checksum"), CacheError);
    }
    SUBCASE("version bump") {
        auto bad = good;
        bad[8] = static_cast<unsigned char>(kCacheVersion + 1);
        reseal(bad);
        dump(f, bad);
        CHECK_THROWS_WITH_AS(load_kl_table(f, 4), doctest::Contains("version"), CacheError);
    }
    SUBCASE("wrong rank or kind") {
        CHECK_THROWS_WITH_AS(load_kl_table(f, 5), doctest::Contains("different n"), CacheError);
        CHECK_THROWS_WITH_AS(load_h_tensor(f, 4), doctest::Contains("different payload"), CacheError);
    }
    SUBCASE("bad magic") {
        auto bad = good;
        bad[0] = 'X';
        dump(f, bad);
        CHECK_THROWS_WITH_AS(load_kl_table(f, 4), doctest::Contains("magic"), CacheError);
    }
}
