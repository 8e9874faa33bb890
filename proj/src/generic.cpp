#include "fengrao/generic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace fengrao {

namespace {

// Above this target size a bitset over [0, m_r] beats merging sorted lists.
constexpr Int kBitsetThreshold = Int{1} << 14;

void require_member(const NumericalSemigroup& s, Int m) {
    if (!s.contains(m)) throw NotMember(std::to_string(m) + " is not a member of the semigroup");
}

void require_order(int r) {
    if (r < 1) throw InvalidArgument("order r must be at least 1");
}

Int search_ceiling(const NumericalSemigroup& s, Int m) {
    const Int e = s.multiplicity();
    return std::max(checked::add(m, e - 1), checked::add(s.conductor(), e - 1));
}

std::vector<Int> single_divisors(const NumericalSemigroup& s, Int t) {
    std::vector<Int> out;
    for (Int a : s.members_in(0, t))
        if (s.contains(t - a)) out.push_back(a);
    return out;
}

// Divisor sets D(t) for every target t in [lo, hi], computed on first use.
class DivisorTable {
  public:
    DivisorTable(const NumericalSemigroup& s, Int lo, Int hi)
        : s_(s), lo_(lo), sets_(static_cast<std::size_t>(hi - lo + 1)), ready_(sets_.size(), 0) {}

    const std::vector<Int>& operator()(Int t) {
        const auto i = static_cast<std::size_t>(t - lo_);
        if (!ready_[i]) {
            sets_[i] = single_divisors(s_, t);
            ready_[i] = 1;
        }
        return sets_[i];
    }

  private:
    const NumericalSemigroup& s_;
    Int lo_;
    std::vector<std::vector<Int>> sets_;
    std::vector<char> ready_;
};

// Running union of divisor sets, as a sorted list or as a bitset.
class UnionBuffer {
  public:
    explicit UnionBuffer(Int hi)
        : bits_mode_(hi > kBitsetThreshold), words_(bits_mode_ ? static_cast<std::size_t>(hi / 64 + 1) : 0) {}

    void assign(const UnionBuffer* base, const std::vector<Int>& add) {
        if (bits_mode_) {
            if (base) {
                words_ = base->words_;
                count_ = base->count_;
            } else {
                std::fill(words_.begin(), words_.end(), 0);
                count_ = 0;
            }
            for (Int a : add) {
                auto& w = words_[static_cast<std::size_t>(a >> 6)];
                const std::uint64_t bit = std::uint64_t{1} << (a & 63);
                if (!(w & bit)) {
                    w |= bit;
                    ++count_;
                }
            }
            return;
        }
        list_.clear();
        if (base)
            std::set_union(base->list_.begin(), base->list_.end(), add.begin(), add.end(), std::back_inserter(list_));
        else
            list_ = add;
        count_ = static_cast<Int>(list_.size());
    }

    Int size() const noexcept { return count_; }

  private:
    bool bits_mode_;
    std::vector<std::uint64_t> words_;
    std::vector<Int> list_;
    Int count_ = 0;
};

class MinimalUnionSearch {
  public:
    MinimalUnionSearch(const NumericalSemigroup& s, int r, Int m)
        : s_(s), r_(r), e_(s.multiplicity()), u_(search_ceiling(s, m)),
          hi_(checked::add(u_, checked::mul(r - 1, e_))), table_(s, m, hi_) {
        for (int i = 0; i < r; ++i) buffers_.emplace_back(hi_);
        tuple_.reserve(static_cast<std::size_t>(r));
        first_ = s.members_in(m, u_);
    }

    Int run() {
        for (Int x : first_) descend(x);
        return best_;
    }

  private:
    void descend(Int x) {
        const std::size_t depth = tuple_.size();
        buffers_[depth].assign(depth ? &buffers_[depth - 1] : nullptr, table_(x));
        const Int size = buffers_[depth].size();
        // Each later target exceeds every earlier one, so it adds at least itself.
        if (size + static_cast<Int>(r_ - 1 - static_cast<int>(depth)) >= best_) return;
        if (static_cast<int>(depth) + 1 == r_) {
            best_ = size;
            return;
        }
        tuple_.push_back(x);
        for (Int y : extensions()) descend(y);
        tuple_.pop_back();
    }

    std::vector<Int> extensions() const {
        // X(m; m_1..m_k) = ({m_k+1..u} ∩ S) ∪ ({m_i + e} \ {0..m_k}).
        const Int last = tuple_.back();
        std::vector<Int> out = s_.members_in(last + 1, u_);
        for (Int t : tuple_)
            if (t + e_ > last) out.push_back(t + e_);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const NumericalSemigroup& s_;
    int r_;
    Int e_;
    Int u_;
    Int hi_;
    DivisorTable table_;
    std::vector<UnionBuffer> buffers_;
    std::vector<Int> tuple_;
    std::vector<Int> first_;
    Int best_ = std::numeric_limits<Int>::max();
};

void build_search_set(const NumericalSemigroup& s, int r, Int m, Int u, std::vector<Int>& prefix,
                      std::vector<Configuration>& out) {
    if (static_cast<int>(prefix.size()) == r) {
        out.push_back(Configuration{prefix, m});
        return;
    }
    std::vector<Int> next;
    if (prefix.empty()) {
        next = s.members_in(m, u);
    } else {
        const Int e = s.multiplicity();
        const Int last = prefix.back();
        next = s.members_in(last + 1, u);
        for (Int t : prefix)
            if (t + e > last) next.push_back(t + e);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    for (Int x : next) {
        prefix.push_back(x);
        build_search_set(s, r, m, u, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Configuration> search_set(const NumericalSemigroup& s, int r, Int m) {
    require_order(r);
    require_member(s, m);
    std::vector<Configuration> out;
    std::vector<Int> prefix;
    build_search_set(s, r, m, search_ceiling(s, m), prefix, out);
    return out;
}

Int feng_rao_distance(const NumericalSemigroup& s, int r, Int m) {
    require_order(r);
    require_member(s, m);
    return MinimalUnionSearch(s, r, m).run();
}

Int oracle_horizon(const NumericalSemigroup& s, int r, Int m) {
    require_order(r);
    return checked::add(search_ceiling(s, m), checked::mul(r - 1, s.multiplicity()));
}

Int feng_rao_distance_oracle(const NumericalSemigroup& s, int r, Int m, Int horizon) {
    require_order(r);
    require_member(s, m);
    // Every entry of F_r(m) is at most u + (r - 1) e: each extension step adds
    // e to an entry that is itself at most u + (step - 1) e. F_r(m) attains the
    // global minimum, hence so does any exhaustive search reaching that far.
    const Int hi = horizon < 0 ? oracle_horizon(s, r, m) : horizon;
    const std::vector<Int> candidates = s.members_in(m, hi);
    if (static_cast<Int>(candidates.size()) < r) throw InvalidArgument("oracle horizon too small for order r");

    const std::size_t words = static_cast<std::size_t>(hi / 64 + 1);
    std::vector<std::vector<std::uint64_t>> sets;
    sets.reserve(candidates.size());
    for (Int t : candidates) {
        std::vector<std::uint64_t> bits(words, 0);
        for (Int a = 0; a <= t; ++a)
            if (s.contains(a) && s.contains(t - a)) bits[static_cast<std::size_t>(a >> 6)] |= std::uint64_t{1} << (a & 63);
        sets.push_back(std::move(bits));
    }

    std::vector<std::vector<std::uint64_t>> prefix(static_cast<std::size_t>(r), std::vector<std::uint64_t>(words));
    Int best = std::numeric_limits<Int>::max();
    std::vector<std::size_t> idx(static_cast<std::size_t>(r));

    // Plain enumeration of index combinations i_0 < i_1 < ... < i_{r-1}.
    auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        for (std::size_t i = start; i + (static_cast<std::size_t>(r) - depth) <= candidates.size(); ++i) {
            auto& cur = prefix[depth];
            const auto& set = sets[i];
            for (std::size_t w = 0; w < words; ++w) cur[w] = (depth ? prefix[depth - 1][w] : 0) | set[w];
            if (depth + 1 == static_cast<std::size_t>(r)) {
                Int count = 0;
                for (auto w : cur) count += std::popcount(w);
                best = std::min(best, count);
            } else {
                self(self, depth + 1, i + 1);
            }
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

FengRaoNumber feng_rao_number(const NumericalSemigroup& s, int r) {
    require_order(r);
    // delta^r(m) = m + 1 - 2g + E from m = 2c - 1 on; N (c = 0) uses m = 0.
    const Int m = std::max<Int>(2 * s.conductor() - 1, 0);
    const Int delta = feng_rao_distance(s, r, m);
    return FengRaoNumber{delta - m - 1 + 2 * s.genus(), r};
}

FengRaoNumber feng_rao_number_2_apery(const NumericalSemigroup& s, AperyScan scan) {
    std::vector<Int> xs;
    if (scan == AperyScan::full) {
        for (Int x = 1; x <= s.multiplicity(); ++x) xs.push_back(x);
    } else {
        if (!is_arf(s)) throw NotArf("distance-restricted Apery scan requires an Arf semigroup");
        xs = multiplicity_sequence(s).d;
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    Int best = std::numeric_limits<Int>::max();
    for (Int x : xs) best = std::min(best, static_cast<Int>(apery(s, x).size()));
    return FengRaoNumber{best, 2};
}

Int divisor_union_size(const NumericalSemigroup& s, std::span<const Int> targets) {
    if (targets.empty()) return 0;
    const Int hi = *std::max_element(targets.begin(), targets.end());
    UnionBuffer a(hi), b(hi);
    UnionBuffer* cur = &a;
    UnionBuffer* prev = nullptr;
    for (Int t : targets) {
        cur->assign(prev, s.contains(t) ? single_divisors(s, t) : std::vector<Int>{});
        prev = cur;
        cur = (cur == &a) ? &b : &a;
    }
    return prev->size();
}

}  // namespace fengrao
