#include "ldpcdist/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace ldpcdist {

const char* to_string(Certificate c) {
    switch (c) {
        case Certificate::exact: return "exact";
        case Certificate::probabilistic: return "probabilistic";
        case Certificate::inconclusive: return "inconclusive";
    }
    return "?";
}

std::uint64_t covering_trials(std::size_t n, std::size_t s, std::size_t d) {
    if (!(d <= s && s <= n) || n == 0)
        throw std::invalid_argument("covering_trials: need 0 <= d <= s <= n, n > 0");
    if (n == 1) return 1;
    auto log_binom = [](std::size_t a, std::size_t b) {
        return std::lgamma(double(a) + 1) - std::lgamma(double(b) + 1) -
               std::lgamma(double(a - b) + 1);
    };
    double log_t = log_binom(n, d) - log_binom(s, d) + std::log(double(n)) +
                   std::log(std::log(double(n)));
    double t = std::ceil(std::exp(log_t));
    if (t < 1.0) return 1;
    if (t >= 9.2e18) return std::numeric_limits<std::uint64_t>::max();
    return std::uint64_t(t);
}

namespace {

BitVector embed(std::size_t n, std::span<const std::size_t> positions, const BitVector& bits) {
    BitVector out(n);
    for (std::size_t j = 0; j < positions.size(); ++j)
        if (bits.get(j)) out.set(positions[j]);
    return out;
}

// First weight-v combination of {0..s-1}, then lexicographic successor.
bool first_combination(std::vector<std::size_t>& combo, std::size_t v) {
    combo.resize(v);
    for (std::size_t i = 0; i < v; ++i) combo[i] = i;
    return true;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t s) {
    std::size_t v = combo.size();
    for (std::size_t i = v; i-- > 0;) {
        if (combo[i] < s - (v - i)) {
            ++combo[i];
            for (std::size_t j = i + 1; j < v; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double log2_binom(std::size_t a, std::size_t b) {
    return (std::lgamma(double(a) + 1) - std::lgamma(double(b) + 1) -
            std::lgamma(double(a - b) + 1)) / std::numbers::ln2_v<double>;
}

std::vector<std::size_t> cyclic_window(std::size_t n, std::size_t start, std::size_t len) {
    std::vector<std::size_t> w(len);
    for (std::size_t j = 0; j < len; ++j) w[j] = (start + j) % n;
    std::sort(w.begin(), w.end());
    return w;
}

struct Hit {
    unsigned weight = 0;
    std::uint64_t trial = 0;
    BitVector witness;
};

bool better(const Hit& a, const Hit& b) {
    return a.weight < b.weight || (a.weight == b.weight && a.trial < b.trial);
}

// Runs trials [0, total) in fixed 256-trial blocks. Blocks run in parallel
// internally but are merged in index order, and the loop stops only at a
// block boundary, so counters and the chosen hit are identical for any
// thread count.
template <typename TrialFn, typename StopPred>
void run_trial_rounds(std::uint64_t total, unsigned threads, TrialFn&& trial,
                      Counters& counters, std::optional<Hit>& best, StopPred&& stop) {
    constexpr std::uint64_t kBlock = 256;
    for (std::uint64_t base = 0; base < total; base += kBlock) {
        std::uint64_t end = std::min(base + kBlock, total);
        unsigned workers = std::min<std::uint64_t>(threads ? threads : 1, end - base);
        if (workers <= 1) {
            for (std::uint64_t t = base; t < end; ++t) {
                auto [c, hit] = trial(t);
                counters += c;
                if (hit && (!best || better(*hit, *best))) best = hit;
            }
        } else {
            std::vector<std::future<std::pair<Counters, std::optional<Hit>>>> futs;
            std::uint64_t span = end - base, chunk = (span + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                std::uint64_t lo = base + w * chunk, hi = std::min(lo + chunk, end);
                if (lo >= hi) break;
                futs.push_back(std::async(std::launch::async, [&trial, lo, hi] {
                    Counters c;
                    std::optional<Hit> local;
                    for (std::uint64_t t = lo; t < hi; ++t) {
                        auto [tc, hit] = trial(t);
                        c += tc;
                        if (hit && (!local || better(*hit, *local))) local = hit;
                    }
                    return std::make_pair(c, local);
                }));
            }
            for (auto& f : futs) {
                auto [c, hit] = f.get();
                counters += c;
                if (hit && (!best || better(*hit, *best))) best = hit;
            }
        }
        if (best && stop(*best)) return;
    }
}

// Factored window solver: one elimination of H_J, then O(r^2) per syndrome.
// Augmenting with the identity yields U with U H_J = rref(H_J).
class WindowSolver {
public:
    WindowSolver(const BitMatrix& h, std::span<const std::size_t> J, Counters* counters)
        : r_(h.rows()), eta_(J.size()) {
        BitMatrix aug(r_, eta_ + r_);
        for (std::size_t row = 0; row < r_; ++row) {
            for (std::size_t j = 0; j < eta_; ++j)
                if (h.get(row, J[j])) aug.set(row, j);
            aug.set(row, eta_ + row);
        }
        Gf2Stats stats;
        // Eliminate only on the first eta_ columns.
        std::size_t pr = 0;
        for (std::size_t c = 0; c < eta_ && pr < r_; ++c) {
            std::size_t sel = r_;
            for (std::size_t row = pr; row < r_; ++row)
                if (aug.get(row, c)) { sel = row; break; }
            if (sel == r_) continue;
            aug.swap_rows(pr, sel);
            for (std::size_t row = 0; row < r_; ++row)
                if (row != pr && aug.get(row, c)) { aug.xor_rows(row, pr); ++stats.row_xors; }
            pivots_.push_back(c);
            ++pr;
        }
        if (counters) {
            counters->row_xors += stats.row_xors;
            ++counters->eliminations;
        }
        rref_ = BitMatrix(r_, eta_);
        transform_ = BitMatrix(r_, r_);
        for (std::size_t row = 0; row < r_; ++row) {
            for (std::size_t j = 0; j < eta_; ++j)
                if (aug.get(row, j)) rref_.set(row, j);
            for (std::size_t j = 0; j < r_; ++j)
                if (aug.get(row, eta_ + j)) transform_.set(row, j);
        }
        // nullspace basis of H_J from the rref
        std::vector<bool> is_pivot(eta_, false);
        for (auto c : pivots_) is_pivot[c] = true;
        for (std::size_t f = 0; f < eta_; ++f) {
            if (is_pivot[f]) continue;
            BitVector x(eta_);
            x.set(f);
            for (std::size_t i = 0; i < pivots_.size(); ++i)
                if (rref_.get(i, f)) x.set(pivots_[i]);
            basis_.push_back(std::move(x));
        }
    }

    std::size_t corank() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }

    // One solution of H_J x^T = y, or nullopt if inconsistent.
    std::optional<BitVector> solve(const BitVector& y) const {
        BitVector z = transform_.mul(y);
        for (std::size_t row = pivots_.size(); row < r_; ++row)
            if (z.get(row)) return std::nullopt;
        BitVector x(eta_);
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (z.get(i)) x.set(pivots_[i]);
        return x;
    }

private:
    std::size_t r_, eta_;
    BitMatrix rref_, transform_;
    std::vector<std::size_t> pivots_;
    std::vector<BitVector> basis_;
};

} // namespace

DistanceResult distance_exhaustive(const Code& code, unsigned dim_cap) {
    DistanceResult res;
    const std::size_t k = code.dim();
    if (k > dim_cap) {
        res.certificate = Certificate::inconclusive;
        res.reason = "dimension cap";
        return res;
    }
    res.certificate = Certificate::exact;
    if (k == 0) return res; // trivial code, no nonzero codewords
    const auto& gen = code.generators();
    BitVector cur(code.n());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = (std::uint64_t(1) << k) - 1;
    for (std::uint64_t i = 1; i <= total; ++i) {
        cur ^= gen[std::countr_zero(i)];
        ++res.counters.row_xors;
        ++res.counters.patterns;
        std::size_t w = cur.weight();
        if (w < best) {
            best = w;
            res.witness = cur;
        }
    }
    res.distance = unsigned(best);
    return res;
}

ErasureCompletion erasure_complete(const Code& code, std::span<const std::size_t> I,
                                   const BitVector& c_I, std::uint64_t enum_cap,
                                   Counters* counters) {
    if (c_I.size() != I.size())
        throw std::invalid_argument("erasure_complete: |c_I| != |I|");
    const std::size_t n = code.n();
    std::vector<bool> in_i(n, false);
    for (auto idx : I) {
        if (idx >= n) throw std::out_of_range("erasure_complete: index out of range");
        in_i[idx] = true;
    }
    std::vector<std::size_t> J;
    for (std::size_t c = 0; c < n; ++c)
        if (!in_i[c]) J.push_back(c);

    // y = H_I c_I^T
    BitVector y(code.num_checks());
    for (std::size_t j = 0; j < I.size(); ++j)
        if (c_I.get(j)) y ^= code.h().column(I[j]);

    BitMatrix hj = column_submatrix(code.h(), J);
    Gf2Stats stats;
    auto sol = solve_affine(hj, y, &stats);
    if (counters) {
        counters->row_xors += stats.row_xors;
        counters->eliminations += stats.eliminations;
    }

    ErasureCompletion out;
    if (!sol) return out; // inconsistent: no completion
    out.corank = sol->basis.size();
    if (out.corank >= 64 || (std::uint64_t(1) << out.corank) > enum_cap) {
        out.conclusive = false;
        return out;
    }
    const std::uint64_t count = std::uint64_t(1) << out.corank;
    out.completions.reserve(count);
    BitVector cur = sol->particular;
    BitVector base = embed(n, I, c_I);
    for (std::uint64_t i = 0;; ++i) {
        BitVector full = base;
        for (std::size_t j = 0; j < J.size(); ++j)
            if (cur.get(j)) full.set(J[j]);
        out.completions.push_back(std::move(full));
        if (i + 1 == count) break;
        cur ^= sol->basis[std::countr_zero(i + 1)];
    }
    return out;
}

DistanceResult distance_sw(const Code& code, const SwOptions& opts) {
    if (!(opts.theta > 0.0 && opts.theta < 1.0))
        throw std::invalid_argument("distance_sw: theta outside (0,1)");
    const std::size_t n = code.n();
    const std::size_t s = std::min<std::size_t>(n, std::size_t(std::ceil((1.0 - opts.theta) * n)));
    const unsigned d_max = opts.d_max ? std::min<std::size_t>(opts.d_max, n) : n;

    // Precompute the n windows and their complements with a factored solver
    // each; windows do not depend on d.
    std::vector<std::vector<std::size_t>> windows(n), complements(n);
    for (std::size_t i = 0; i < n; ++i) {
        windows[i] = cyclic_window(n, i, s);
        std::vector<bool> in_w(n, false);
        for (auto p : windows[i]) in_w[p] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!in_w[c]) complements[i].push_back(c);
    }

    DistanceResult res;
    std::vector<std::unique_ptr<WindowSolver>> solvers(n);
    for (unsigned d = 1; d <= d_max; ++d) {
        bool cap_fired = false;
        std::optional<BitVector> witness;
        for (std::size_t i = 0; i < n && !(witness && opts.early_exit); ++i) {
            const auto& window = windows[i];
            const auto& J = complements[i];
            if (!solvers[i])
                solvers[i] = std::make_unique<WindowSolver>(code.h(), J, &res.counters);
            const WindowSolver& solver = *solvers[i];
            const std::size_t b = solver.corank();
            const bool window_capped = b >= 64 || (std::uint64_t(1) << b) > opts.enum_cap;

            std::size_t v_lo = (std::size_t(d) * s) / n;
            std::size_t v_hi = (std::size_t(d) * s + n - 1) / n;
            std::vector<std::size_t> candidate_v{v_lo};
            if (v_hi != v_lo) candidate_v.push_back(v_hi);
            for (std::size_t v : candidate_v) {
                if (v > s || v > d || d - v > n - s) continue;
                std::vector<std::size_t> combo;
                first_combination(combo, v);
                bool more = true;
                BitVector pattern(s);
                do {
                    ++res.counters.patterns;
                    if (window_capped) { cap_fired = true; continue; }
                    for (std::size_t p = 0; p < s; ++p) pattern.set(p, false);
                    for (auto idx : combo) pattern.set(idx);
                    // y = H_I c_I^T
                    BitVector y(code.num_checks());
                    for (auto idx : combo) y ^= code.h().column(window[idx]);
                    auto part = solver.solve(y);
                    if (!part) continue;
                    // enumerate the coset of completions
                    BitVector cur = *part;
                    const std::uint64_t count = std::uint64_t(1) << b;
                    for (std::uint64_t q = 0;; ++q) {
                        if (v + cur.weight() == d) {
                            BitVector full = embed(n, window, pattern);
                            for (std::size_t j = 0; j < J.size(); ++j)
                                if (cur.get(j)) full.set(J[j]);
                            if (!witness) witness = full;
                        }
                        if (q + 1 == count) break;
                        cur ^= solver.basis()[std::countr_zero(q + 1)];
                        ++res.counters.row_xors;
                    }
                    if (witness && opts.early_exit) { more = false; break; }
                } while (more && next_combination(combo, s));
                if (witness && opts.early_exit) break;
            }
        }
        if (witness) {
            res.distance = d;
            res.witness = witness;
            res.certificate = Certificate::exact;
            return res;
        }
        if (cap_fired) {
            res.certificate = Certificate::inconclusive;
            res.reason = "co-rank cap";
            return res;
        }
    }
    res.certificate = Certificate::inconclusive;
    res.reason = "exhausted d_max";
    return res;
}

DistanceResult distance_mb(const Code& code, const MbOptions& opts) {
    const std::size_t n = code.n();
    const std::size_t s_l = n / 2, s_r = n - s_l;
    const unsigned d_max = opts.d_max ? std::min<std::size_t>(opts.d_max, n) : n;

    // Columns of H, reused for all syndrome accumulation.
    std::vector<BitVector> columns(n);
    for (std::size_t c = 0; c < n; ++c) columns[c] = code.h().column(c);

    DistanceResult res;
    struct Entry {
        BitVector syn;
        std::vector<std::size_t> combo;
    };

    for (unsigned d = 1; d <= d_max; ++d) {
        const std::size_t v_l = d / 2, v_r = d - v_l;
        if (v_l > s_l || v_r > s_r) continue;
        if (log2_binom(s_l, v_l) > std::log2(double(opts.list_cap)) ||
            log2_binom(s_r, v_r) > std::log2(double(opts.list_cap))) {
            res.certificate = Certificate::inconclusive;
            res.reason = "list cap";
            return res;
        }
        std::optional<BitVector> witness;
        for (std::size_t i = 0; i < n && !(witness && opts.early_exit); ++i) {
            auto left = cyclic_window(n, i, s_l);
            auto right = cyclic_window(n, i + s_l, s_r);

            std::vector<Entry> list;
            std::vector<std::size_t> combo;
            first_combination(combo, v_l);
            bool more = true;
            while (more) {
                ++res.counters.patterns;
                BitVector syn(code.num_checks());
                for (auto idx : combo) syn ^= columns[left[idx]];
                list.push_back({std::move(syn), combo});
                more = next_combination(combo, s_l);
            }
            std::sort(list.begin(), list.end(),
                      [](const Entry& a, const Entry& b) { return a.syn.lex_less(b.syn); });

            first_combination(combo, v_r);
            more = true;
            while (more) {
                ++res.counters.patterns;
                BitVector syn(code.num_checks());
                for (auto idx : combo) syn ^= columns[right[idx]];
                auto lo = std::lower_bound(list.begin(), list.end(), syn,
                                           [](const Entry& e, const BitVector& s) {
                                               return e.syn.lex_less(s);
                                           });
                for (auto it = lo; it != list.end() && it->syn == syn; ++it) {
                    BitVector c(n);
                    for (auto idx : it->combo) c.set(left[idx]);
                    for (auto idx : combo) c.set(right[idx]);
                    if (!witness) witness = c;
                }
                if (witness && opts.early_exit) break;
                more = next_combination(combo, s_r);
            }
        }
        if (witness) {
            res.distance = d;
            res.witness = witness;
            res.certificate = Certificate::exact;
            return res;
        }
    }
    res.certificate = Certificate::inconclusive;
    res.reason = "exhausted d_max";
    return res;
}

DistanceResult distance_cs(const Code& code, const CsOptions& opts) {
    if (!(opts.theta > 0.0 && opts.theta < 1.0))
        throw std::invalid_argument("distance_cs: theta outside (0,1)");
    const std::size_t n = code.n();
    const std::size_t s = std::size_t(opts.theta * n);
    if (s < 1) throw std::invalid_argument("distance_cs: floor(theta n) must be >= 1");
    const unsigned d_max = std::min<std::size_t>(opts.d_max ? opts.d_max : s, s);

    DistanceResult res;
    for (unsigned d = 1; d <= d_max; ++d) {
        const std::uint64_t trials = covering_trials(n, s, d);
        auto trial = [&, d](std::uint64_t t) -> std::pair<Counters, std::optional<Hit>> {
            Counters c;
            std::optional<Hit> hit;
            Rng rng = Rng::child(opts.seed, (std::uint64_t(d) << 32) | t);
            auto J = rng.subset(n, s);
            std::sort(J.begin(), J.end());
            BitMatrix hj = column_submatrix(code.h(), J);
            Gf2Stats stats;
            auto basis = nullspace_basis(hj, &stats);
            c.row_xors += stats.row_xors;
            c.eliminations += 1;
            c.trials += 1;
            const std::size_t b = basis.size();
            if (b > opts.b_cap) {
                c.skipped_bcap += 1;
                return {c, hit};
            }
            if (b == 0) return {c, hit};
            BitVector cur(s);
            const std::uint64_t combos = (std::uint64_t(1) << b) - 1;
            for (std::uint64_t q = 1; q <= combos; ++q) {
                cur ^= basis[std::countr_zero(q)];
                c.row_xors += 1;
                c.patterns += 1;
                if (cur.weight() == d) {
                    hit = Hit{d, t, embed(n, J, cur)};
                    break;
                }
            }
            return {c, hit};
        };
        std::optional<Hit> best;
        run_trial_rounds(trials, opts.threads, trial, res.counters, best,
                         [](const Hit&) { return true; });
        if (best) {
            res.distance = best->weight;
            res.witness = best->witness;
            res.certificate = Certificate::probabilistic;
            res.confidence = 1.0 - std::exp(-double(n) * std::log(double(n)));
            return res;
        }
    }
    res.certificate = Certificate::inconclusive;
    res.reason = "exhausted d_max";
    return res;
}

DistanceResult cs_decode(const Code& code, const BitVector& v, const CsOptions& opts) {
    if (v.size() != code.num_checks())
        throw std::invalid_argument("cs_decode: syndrome length mismatch");
    if (!v.any())
        throw std::invalid_argument("cs_decode: zero syndrome; use distance_cs for codewords");
    if (!(opts.theta > 0.0 && opts.theta < 1.0))
        throw std::invalid_argument("cs_decode: theta outside (0,1)");
    const std::size_t n = code.n();
    const std::size_t s = std::size_t(opts.theta * n);
    if (s < 1) throw std::invalid_argument("cs_decode: floor(theta n) must be >= 1");
    const unsigned d_max = std::min<std::size_t>(opts.d_max ? opts.d_max : s, s);

    DistanceResult res;
    std::optional<Hit> best;
    for (unsigned d = 1; d <= d_max; ++d) {
        const std::uint64_t trials = covering_trials(n, s, d);
        auto trial = [&, d](std::uint64_t t) -> std::pair<Counters, std::optional<Hit>> {
            Counters c;
            std::optional<Hit> hit;
            Rng rng = Rng::child(opts.seed, (std::uint64_t(d) << 32) | t);
            auto J = rng.subset(n, s);
            std::sort(J.begin(), J.end());
            BitMatrix hj = column_submatrix(code.h(), J);
            Gf2Stats stats;
            auto sol = solve_affine(hj, v, &stats);
            c.row_xors += stats.row_xors;
            c.eliminations += 1;
            c.trials += 1;
            if (!sol) return {c, hit};
            const std::size_t b = sol->basis.size();
            if (b > opts.b_cap) {
                c.skipped_bcap += 1;
                return {c, hit};
            }
            BitVector cur = sol->particular;
            const std::uint64_t count = std::uint64_t(1) << b;
            for (std::uint64_t q = 0;; ++q) {
                c.patterns += 1;
                unsigned w = unsigned(cur.weight());
                if (!hit || w < hit->weight) hit = Hit{w, t, embed(n, J, cur)};
                if (q + 1 == count) break;
                cur ^= sol->basis[std::countr_zero(q + 1)];
                c.row_xors += 1;
            }
            return {c, hit};
        };
        run_trial_rounds(trials, opts.threads, trial, res.counters, best,
                         [d](const Hit& h) { return h.weight <= d; });
        if (best && best->weight <= d) break;
    }
    if (best) {
        res.distance = best->weight;
        res.witness = best->witness;
        res.certificate = Certificate::probabilistic;
        res.confidence = 1.0 - std::exp(-double(n) * std::log(double(n)));
    } else {
        res.certificate = Certificate::inconclusive;
        res.reason = "exhausted d_max";
    }
    return res;
}

} // namespace ldpcdist
