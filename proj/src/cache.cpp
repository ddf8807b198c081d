#include "cellkit/cache.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <unistd.h>

#include <zlib.h>

namespace cellkit {

namespace {

constexpr char kMagic[8] = {'C', 'E', 'L', 'L', 'K', 'I', 'T', '\0'};

class Writer {
public:
    void bytes(const void* data, size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        buf_.insert(buf_.end(), p, p + len);
    }
    void u32(std::uint32_t v) {
        for (int k = 0; k < 4; ++k) buf_.push_back(static_cast<unsigned char>(v >> (8 * k)));
    }
    void u64(std::uint64_t v) {
        for (int k = 0; k < 8; ++k) buf_.push_back(static_cast<unsigned char>(v >> (8 * k)));
    }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void perm(const Perm& w) {
        for (int k : w.images()) buf_.push_back(static_cast<unsigned char>(k));
    }
    void laurent(const Laurent& p) {
        u32(static_cast<std::uint32_t>(p.size()));
        for (const auto& t : p.terms()) {
            i32(t.exp);
            const std::string s = t.coeff.to_string();
            u32(static_cast<std::uint32_t>(s.size()));
            bytes(s.data(), s.size());
        }
    }
    std::vector<unsigned char>& buffer() { return buf_; }

private:
    std::vector<unsigned char> buf_;
};

class Reader {
public:
    Reader(const unsigned char* data, size_t len) : data_(data), len_(len) {}
    void need(size_t k) const {
        if (pos_ + k > len_) throw CacheError("cache file is truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * k);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(data_[pos_++]) << (8 * k);
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    std::string str(size_t k) {
        need(k);
        std::string s(reinterpret_cast<const char*>(data_ + pos_), k);
        pos_ += k;
        return s;
    }
    Perm perm(int n) {
        need(static_cast<size_t>(n));
        std::vector<int> images(data_ + pos_, data_ + pos_ + n);
        pos_ += static_cast<size_t>(n);
        try {
            return Perm(std::move(images));
        } catch (const std::invalid_argument&) {
            throw CacheError("cache file holds an invalid permutation");
        }
    }
    Laurent laurent() {
        const std::uint32_t count = u32();
        std::vector<Laurent::Term> terms;
        for (std::uint32_t k = 0; k < count; ++k) {
            const int exp = i32();
            const std::uint32_t len = u32();
            try {
                terms.push_back({exp, Integer::from_string(str(len))});
            } catch (const std::invalid_argument&) {
                throw CacheError("cache file holds an invalid coefficient");
            }
        }
        return Laurent::from_terms(std::move(terms));
    }
    bool at_end() const { return pos_ == len_; }

private:
    const unsigned char* data_;
    size_t len_;
    size_t pos_ = 0;
};

std::uint32_t crc_of(const unsigned char* data, size_t len) {
    return static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), data, static_cast<uInt>(len)));
}

// The records are deflated as one block; the header gains the raw and
// compressed payload sizes.
void publish(const std::filesystem::path& file, int n, CacheKind kind, std::uint64_t records, const std::vector<unsigned char>& payload) {
    uLongf packed_len = compressBound(static_cast<uLong>(payload.size()));
    std::vector<unsigned char> packed(packed_len);
    if (compress2(packed.data(), &packed_len, payload.data(), static_cast<uLong>(payload.size()), Z_BEST_SPEED) != Z_OK)
        throw std::runtime_error("cannot compress cache payload");
    packed.resize(packed_len);

    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.u32(kCacheVersion);
    w.u32(static_cast<std::uint32_t>(n));
    w.u32(static_cast<std::uint32_t>(kind));
    w.u64(records);
    w.u64(payload.size());
    w.u64(packed.size());
    w.bytes(packed.data(), packed.size());
    w.u32(crc_of(w.buffer().data(), w.buffer().size()));

    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    const std::filesystem::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write cache file " + tmp.string());
        os.write(reinterpret_cast<const char*>(w.buffer().data()), static_cast<std::streamsize>(w.buffer().size()));
        if (!os) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

// Validates the envelope and returns the inflated records with their count.
std::pair<std::vector<unsigned char>, std::uint64_t> open_checked(const std::filesystem::path& file, int n, CacheKind kind) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw CacheError("cache file " + file.string() + " is missing");
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    constexpr size_t kHeader = sizeof kMagic + 4 + 4 + 4 + 8 + 8 + 8;
    if (data.size() < kHeader + 4) throw CacheError("cache file is truncated");
    if (std::memcmp(data.data(), kMagic, sizeof kMagic) != 0) throw CacheError("cache file has a bad magic number");
    const size_t body = data.size() - 4;
    Reader tail(data.data() + body, 4);
    if (tail.u32() != crc_of(data.data(), body)) throw CacheError("cache checksum mismatch");
    Reader r(data.data() + sizeof kMagic, body - sizeof kMagic);
    if (r.u32() != kCacheVersion) throw CacheError("cache format version mismatch");
    if (r.u32() != static_cast<std::uint32_t>(n)) throw CacheError("cache file is for a different n");
    if (r.u32() != static_cast<std::uint32_t>(kind)) throw CacheError("cache file holds a different payload");
    const std::uint64_t records = r.u64();
    const std::uint64_t raw_len = r.u64();
    const std::uint64_t packed_len = r.u64();
    if (kHeader + packed_len != body) throw CacheError("cache payload size mismatch");
    std::vector<unsigned char> raw(raw_len);
    uLongf out_len = static_cast<uLongf>(raw_len);
    if (uncompress(raw.data(), &out_len, data.data() + kHeader, static_cast<uLong>(packed_len)) != Z_OK || out_len != raw_len)
        throw CacheError("cache payload does not inflate");
    return {std::move(raw), records};
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, CacheKind kind, int n) {
    return dir / ((kind == CacheKind::kl_table ? "kl_n" : "h_n") + std::to_string(n) + ".bin");
}

void save_kl_table(const std::filesystem::path& file, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    std::uint64_t records = 0;
    for (int w = 0; w < g.size(); ++w)
        for (int y = 0; y < g.size(); ++y)
            if (!table.p(y, w).is_zero()) ++records;
    Writer out;
    for (int w = 0; w < g.size(); ++w)
        for (int y = 0; y < g.size(); ++y)
            if (!table.p(y, w).is_zero()) {
                out.perm(g.element(y));
                out.perm(g.element(w));
                out.laurent(table.p(y, w));
            }
    publish(file, g.n(), CacheKind::kl_table, records, out.buffer());
}

void save_h_tensor(const std::filesystem::path& file, const HTensor& tensor) {
    const SymmetricGroup& g = *tensor.group();
    Writer out;
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            for (const auto& [z, h] : tensor.row(x, y)) {
                out.perm(g.element(x));
                out.perm(g.element(y));
                out.perm(g.element(z));
                out.laurent(h);
            }
    publish(file, g.n(), CacheKind::h_tensor, tensor.nonzero_count(), out.buffer());
}

std::shared_ptr<KLTable> load_kl_table(const std::filesystem::path& file, int n) {
    auto [data, records] = open_checked(file, n, CacheKind::kl_table);
    const GroupPtr g = SymmetricGroup::get(n);
    const size_t N = static_cast<size_t>(g->size());
    std::vector<std::vector<Laurent>> p(N, std::vector<Laurent>(N));
    Reader r(data.data(), data.size());
    for (std::uint64_t k = 0; k < records; ++k) {
        const int y = g->index_of(r.perm(n));
        const int w = g->index_of(r.perm(n));
        p[static_cast<size_t>(w)][static_cast<size_t>(y)] = r.laurent();
    }
    if (!r.at_end()) throw CacheError("cache file has trailing data");
    return KLTable::from_polynomials(n, std::move(p));
}

std::shared_ptr<HTensor> load_h_tensor(const std::filesystem::path& file, int n) {
    auto [data, records] = open_checked(file, n, CacheKind::h_tensor);
    const GroupPtr g = SymmetricGroup::get(n);
    const size_t N = static_cast<size_t>(g->size());
    std::vector<HTensor::Row> rows(N * N);
    Reader r(data.data(), data.size());
    for (std::uint64_t k = 0; k < records; ++k) {
        const int x = g->index_of(r.perm(n));
        const int y = g->index_of(r.perm(n));
        const int z = g->index_of(r.perm(n));
        auto& row = rows[static_cast<size_t>(x) * N + static_cast<size_t>(y)];
        if (!row.empty() && row.back().first >= z) throw CacheError("cache records are out of order");
        row.emplace_back(z, r.laurent());
    }
    if (!r.at_end()) throw CacheError("cache file has trailing data");
    return HTensor::from_rows(g, std::move(rows));
}

}  // namespace cellkit
