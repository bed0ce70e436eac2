#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "reglat/lattice.hpp"

namespace reglat {

struct BoundTooLarge : Error {
    BoundTooLarge() : Error("sieve bound exceeds the configured memory budget") {}
};

inline constexpr i64 kMaxSieveBound = i64{1} << 30;

/// Bit-per-integer membership map over [0, B].
class Bitmap {
  public:
    explicit Bitmap(i64 bound) : bound_(bound), words_((static_cast<size_t>(bound) >> 6) + 1, 0) {}

    i64 bound() const { return bound_; }
    bool test(i64 n) const {
        if (n < 0 || n > bound_) return false;
        return (words_[static_cast<size_t>(n) >> 6] >> (n & 63)) & 1;
    }
    void set(i64 n) { words_[static_cast<size_t>(n) >> 6] |= uint64_t{1} << (n & 63); }

    /// this |= other << shift (clipped to the bound).
    void or_shifted(const Bitmap& other, i64 shift) {
        size_t word_shift = static_cast<size_t>(shift) >> 6;
        int bit_shift = static_cast<int>(shift & 63);
        size_t n = words_.size();
        if (bit_shift == 0) {
            for (size_t i = n; i-- > word_shift;)
                words_[i] |= other.words_[i - word_shift];
        } else {
            for (size_t i = n; i-- > word_shift;) {
                uint64_t v = other.words_[i - word_shift] << bit_shift;
                if (i > word_shift)
                    v |= other.words_[i - word_shift - 1] >> (64 - bit_shift);
                words_[i] |= v;
            }
        }
        i64 top = bound_ + 1;
        if (top & 63) words_.back() &= (uint64_t{1} << (top & 63)) - 1;
    }

    /// Does (other << shift) reach any position not already set here?
    bool shifted_subset(const Bitmap& other, i64 shift) const {
        for (i64 base = 0; base + shift <= bound_; base += 64) {
            uint64_t v = other.word_at(base);
            i64 hi = bound_ - shift - base;
            if (hi < 63) v &= (uint64_t{1} << (hi + 1)) - 1;
            uint64_t here = word_at_unaligned(base + shift);
            if (v & ~here) return false;
        }
        return true;
    }

    bool operator==(const Bitmap& o) const { return bound_ == o.bound_ && words_ == o.words_; }
    bool operator!=(const Bitmap& o) const { return !(*this == o); }

    /// Least set position in [from, bound], or nullopt.
    std::optional<i64> first_set(i64 from = 0) const {
        for (i64 n = from; n <= bound_; ++n) {
            if ((n & 63) == 0) {
                while (n + 63 <= bound_ && words_[static_cast<size_t>(n) >> 6] == 0) n += 64;
                if (n > bound_) break;
            }
            if (test(n)) return n;
        }
        return std::nullopt;
    }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

  private:
    uint64_t word_at(i64 base) const {
        return words_[static_cast<size_t>(base) >> 6];
    }
    uint64_t word_at_unaligned(i64 pos) const {
        size_t w = static_cast<size_t>(pos) >> 6;
        int b = static_cast<int>(pos & 63);
        uint64_t v = words_[w] >> b;
        if (b && w + 1 < words_.size()) v |= words_[w + 1] << (64 - b);
        return v;
    }

    i64 bound_;
    std::vector<uint64_t> words_;
};

/// Exact bitmap of Q(L) over [0, B], built stage by stage:
/// S_0 = {0}; S_i = { s + a_i x^2 <= B }.
class RepSieve {
  public:
    RepSieve(DiagonalLattice lattice, i64 bound)
        : lattice_(std::move(lattice)), bits_(check_bound(bound)) {
        bits_.set(0);
        for (i64 a : lattice_.coeffs()) {
            Bitmap prev = bits_;
            for (i64 x = 1; a <= bound / (x * x); ++x)
                bits_.or_shifted(prev, a * x * x);
        }
    }

    const DiagonalLattice& lattice() const { return lattice_; }
    i64 bound() const { return bits_.bound(); }
    bool test(i64 n) const { return bits_.test(n); }
    const Bitmap& bits() const { return bits_; }

  private:
    struct raw_tag {};
    RepSieve(raw_tag, DiagonalLattice lattice, Bitmap bits)
        : lattice_(std::move(lattice)), bits_(std::move(bits)) {}

    static i64 check_bound(i64 bound) {
        if (bound < 1 || bound > kMaxSieveBound) throw BoundTooLarge();
        return bound;
    }

    DiagonalLattice lattice_;
    Bitmap bits_;

    friend class SieveCache;
};

namespace detail {

inline bool represents_direct(const std::vector<i64>& coeffs, size_t i, i64 n) {
    if (n == 0) return true;
    if (i == 0) return false;
    i64 a = coeffs[i - 1];
    for (i64 x = isqrt(n / a); x >= 0; --x)
        if (represents_direct(coeffs, i - 1, n - a * x * x)) return true;
    return false;
}

}  // namespace detail

/// Read-mostly sieve cache keyed by (coefficients, bound), with optional
/// persistence.  Header: "REGLAT-SIEVE v1\n<coeffs>\n<B>\n" then the raw
/// little-endian bitmap.
class SieveCache {
  public:
    static SieveCache& instance() {
        static SieveCache c;
        return c;
    }

    void set_directory(std::string dir) {
        std::lock_guard<std::mutex> lock(mu_);
        dir_ = std::move(dir);
    }

    /// Cached sieve covering at least n, if one exists; never builds.
    std::shared_ptr<const RepSieve> peek(const DiagonalLattice& L, i64 n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.lower_bound(Key{L.coeffs(), n});
        if (it != map_.end() && it->first.first == L.coeffs()) return it->second;
        return nullptr;
    }

    std::shared_ptr<const RepSieve> get(const DiagonalLattice& L, i64 B) {
        Key key{L.coeffs(), B};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) {
                ++hits_;
                return it->second;
            }
            ++misses_;
        }
        std::shared_ptr<const RepSieve> s;
        if (auto loaded = load_file(L, B))
            s = std::make_shared<const RepSieve>(std::move(*loaded));
        else {
            s = std::make_shared<const RepSieve>(L, B);
            save_file(*s);
        }
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, ins] = map_.emplace(std::move(key), std::move(s));
        return it->second;
    }

    i64 hits() const { return hits_; }
    i64 misses() const { return misses_; }
    void clear_memory() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

    static std::string env_directory() {
        const char* e = std::getenv("REGLAT_CACHE");
        return e ? std::string(e) : std::string();
    }

  private:
    using Key = std::pair<std::vector<i64>, i64>;

    SieveCache() : dir_(env_directory()) {}

    std::string file_path(const DiagonalLattice& L, i64 B) const {
        std::string name = L.to_string();
        for (char& c : name)
            if (c == ',') c = '_';
        return dir_ + "/" + name + "." + std::to_string(B) + ".sieve";
    }

    std::optional<RepSieve> load_file(const DiagonalLattice& L, i64 B) {
        std::string dir;
        {
            std::lock_guard<std::mutex> lock(mu_);
            dir = dir_;
        }
        if (dir.empty()) return std::nullopt;
        std::ifstream in(file_path(L, B), std::ios::binary);
        if (!in) return std::nullopt;
        std::string magic, coeffs, bound;
        if (!std::getline(in, magic) || magic != "REGLAT-SIEVE v1") return std::nullopt;
        if (!std::getline(in, coeffs) || coeffs != L.to_string()) return std::nullopt;
        if (!std::getline(in, bound) || std::stoll(bound) != B) return std::nullopt;
        Bitmap bits(B);
        std::vector<unsigned char> raw(bits.words().size() * 8);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size())) return std::nullopt;
        for (size_t w = 0; w < bits.words().size(); ++w) {
            uint64_t v = 0;
            for (int b = 7; b >= 0; --b) v = (v << 8) | raw[w * 8 + static_cast<size_t>(b)];
            bits.words()[w] = v;
        }
        return RepSieve(RepSieve::raw_tag{}, L, std::move(bits));
    }

    void save_file(const RepSieve& s) {
        std::string dir;
        {
            std::lock_guard<std::mutex> lock(mu_);
            dir = dir_;
        }
        if (dir.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::ofstream out(file_path(s.lattice(), s.bound()), std::ios::binary);
        if (!out) return;
        out << "REGLAT-SIEVE v1\n" << s.lattice().to_string() << "\n" << s.bound() << "\n";
        for (uint64_t w : s.bits().words())
            for (int b = 0; b < 8; ++b) out.put(static_cast<char>((w >> (8 * b)) & 0xff));
    }

    std::mutex mu_;
    std::string dir_;
    std::map<Key, std::shared_ptr<const RepSieve>> map_;
    std::atomic<i64> hits_{0};
    std::atomic<i64> misses_{0};
};

/// true iff n in Q(L); serves from a cached sieve when one covers n, else
/// falls back to a direct bounded search.
inline bool represents(const DiagonalLattice& L, i64 n) {
    if (n < 0) return false;
    if (n == 0) return true;
    if (auto s = SieveCache::instance().peek(L, n)) return s->test(n);
    return detail::represents_direct(L.coeffs(), L.coeffs().size(), n);
}

inline std::shared_ptr<const RepSieve> rep_sieve(const DiagonalLattice& L, i64 B) {
    return SieveCache::instance().get(L, B);
}

}  // namespace reglat
