#include "k3/weil/enumerate.hpp"

#include "k3/exactpoly/factor.hpp"
#include "k3/weil/checks.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace k3 {

namespace {

struct SearchSpace
{
    Int p;
    long a;
    Int q;
    int d;
    const EnumerateOptions* opt;
};

Int binomial(int n, int k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int ceil_div(const Rat& r)
{
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Int floor_div(const Rat& r)
{
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

long valuation_of_int(Int m, const Int& p)
{
    long v = 0;
    while (m != 0 && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

class Searcher
{
  public:
    explicit Searcher(const SearchSpace& s) : s_(s), c_(s.d + 1), vals_(s.d + 1), sums_(s.d + 1) {}

    // Runs the subtree below the given c_1 (or the whole tree when first is empty).
    void run(std::optional<Int> first_numerator)
    {
        c_[0] = 1;
        first_ = std::move(first_numerator);
        descend(1, 0);
    }

    std::vector<WeilCandidate> found;
    EnumerateStats stats;

  private:
    void descend(int k, int h)
    {
        if (k > s_.d) {
            if (h == 0)
                return;
            leaf(h);
            return;
        }
        const int two_d = 2 * s_.d;
        // Newton: s_k = -k c_k - sum_{j<k} s_j c_{k-j}; |s_k| <= 2d.
        Rat partial = 0;
        for (int j = 1; j < k; ++j)
            partial += sums_[j] * c_[k - j];
        Rat lo = (Rat(-two_d) - partial) / k, hi = (Rat(two_d) - partial) / k;
        Rat bin(binomial(two_d, k));
        lo = std::max(lo, Rat(-bin));
        hi = std::min(hi, bin);
        if (lo > hi)
            return;
        // c_k = m / q, so vp(c_k) = vp(m) - a >= -a.
        Int mlo = ceil_div(lo * Rat(s_.q)), mhi = floor_div(hi * Rat(s_.q));
        // Before the height h is known, c_k either has valuation -a (then
        // h = k) or lies above the segment to (h, -a) for some h > k, which
        // needs vp(c_k) >= -a k / (k + 1).
        long min_vm = h ? 0 : Int(ceil_div(Rat(-s_.a * k, k + 1)) + s_.a).get_si();
        long step_exp = s_.opt->integral_only ? s_.a : 0;
        Int step = ipow(s_.p, static_cast<unsigned long>(step_exp));
        Int start = ceil_div(Rat(mlo, step)) * step;
        for (Int m = start; m <= mhi; m += step) {
            if (k == 1 && first_ && m != *first_)
                continue;
            long vm = m == 0 ? s_.a + 1000 : valuation_of_int(m, s_.p);
            int new_h = h;
            if (h == 0 && vm != 0 && (vm < min_vm || k == s_.d))
                continue;
            if (vm == 0 && h == 0) {
                // First coefficient of valuation -a fixes the height; earlier
                // coefficients must lie on or above the new segment.
                bool ok = true;
                for (int i = 1; i < k && ok; ++i)
                    if (vals_[i] && Rat(*vals_[i]) < Rat(-s_.a * i, k))
                        ok = false;
                if (!ok)
                    continue;
                new_h = k;
            }
            c_[k] = Rat(m, s_.q);
            c_[k].canonicalize();
            vals_[k] = m == 0 ? std::nullopt : std::optional<long>(vm - s_.a);
            sums_[k] = -Rat(k) * c_[k] - partial;
            descend(k + 1, new_h);
        }
    }

    void leaf(int)
    {
        ++stats.leaves;
        const int d = s_.d;
        std::vector<Rat> coeffs(2 * d + 1);
        for (int i = 0; i <= d; ++i)
            coeffs[i] = coeffs[2 * d - i] = c_[i];
        WeilCandidate cand{Poly(coeffs), s_.p, s_.a};
        if (s_.opt->value_at_1 && cand.L(Rat(1)) != *s_.opt->value_at_1)
            return;
        if (s_.opt->exclude_value_at_minus_1 && cand.L(Rat(-1)) == *s_.opt->exclude_value_at_minus_1)
            return;
        // Cheap necessary conditions first.
        if (check_unit_circle(cand).verdict != Verdict::Pass)
            return;
        if (check_newton_shape(cand).result.verdict != Verdict::Pass)
            return;
        ++stats.checked;
        WeilReport r = check_all(cand);
        if (r.any_unknown())
            ++stats.unknown;
        if (r.admissible())
            found.push_back(std::move(cand));
    }

    SearchSpace s_;
    std::vector<Rat> c_;
    std::vector<std::optional<long>> vals_;
    std::vector<Rat> sums_;
    std::optional<Int> first_;
};

bool coefficient_less(const WeilCandidate& x, const WeilCandidate& y)
{
    const auto& a = x.L.coefficients();
    const auto& b = y.L.coefficients();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<WeilCandidate> enumerate(const Int& q, int two_d, const EnumerateOptions& options,
                                     EnumerateStats* stats)
{
    if (two_d < 2 || two_d % 2)
        throw std::domain_error("enumerate: degree must be even and at least 2");
    if (two_d > options.max_degree)
        throw std::domain_error("enumerate: degree " + std::to_string(two_d) +
                                " exceeds the configured bound " +
                                std::to_string(options.max_degree));
    if (q < 2)
        throw std::domain_error("enumerate: q must be a prime power");
    auto fq = factor_integer(q);
    if (fq.size() != 1)
        throw std::domain_error("enumerate: q = " + q.get_str() + " is not a prime power");

    SearchSpace space{fq[0].first, static_cast<long>(fq[0].second), q, two_d / 2, &options};

    // Partition by the numerator of c_1 so subtrees are independent.
    const Int bound = Int(two_d) * q;
    std::vector<Int> firsts;
    for (Int m = -bound; m <= bound; ++m)
        firsts.push_back(m);

    std::vector<WeilCandidate> all;
    EnumerateStats total;
    const unsigned workers = std::max(1u, options.threads);
    auto run_chunk = [&](std::size_t begin, std::size_t end) {
        std::vector<WeilCandidate> out;
        EnumerateStats st;
        for (std::size_t i = begin; i < end; ++i) {
            Searcher s(space);
            s.run(firsts[i]);
            out.insert(out.end(), s.found.begin(), s.found.end());
            st.leaves += s.stats.leaves;
            st.checked += s.stats.checked;
            st.unknown += s.stats.unknown;
        }
        return std::make_pair(std::move(out), st);
    };
    std::vector<std::future<std::pair<std::vector<WeilCandidate>, EnumerateStats>>> futures;
    const std::size_t chunk = (firsts.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < firsts.size(); b += chunk)
        futures.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                     run_chunk, b, std::min(firsts.size(), b + chunk)));
    for (auto& f : futures) {
        auto [out, st] = f.get();
        all.insert(all.end(), out.begin(), out.end());
        total.leaves += st.leaves;
        total.checked += st.checked;
        total.unknown += st.unknown;
    }
    std::sort(all.begin(), all.end(), coefficient_less);
    if (stats)
        *stats = total;
    return all;
}

}  // namespace k3
