#include "hhsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hhsum/acceleration.hpp"
#include "hhsum/config.hpp"
#include "hhsum/errors.hpp"
#include "hhsum/quadrature.hpp"
#include "hhsum/sequences.hpp"

namespace hhsum {

using boost::multiprecision::abs;
using boost::multiprecision::pow;

Summand Summand::from_spec(const SumSpec& spec) {
    spec.validate();
    Summand t;
    t.factors.push_back({spec.p, spec.s});
    if (spec.kind == SumSpec::Kind::Quadratic) t.factors.push_back({spec.p2, spec.s2});
    t.m = spec.m;
    for (int r = 1; r <= spec.k; ++r) t.shifts.push_back(r);
    t.scale = BigRational(factorial(static_cast<unsigned>(spec.k)));
    t.alternating = spec.alternating;
    return t;
}

namespace {

BigRational factor_value(const HarmonicFactor& f, std::uint64_t n) {
    if (f.p >= 1) return hyperharmonic(n, f.p, f.s);
    return harmonic(n, f.p);
}

void check_factors(const Summand& t) {
    for (const auto& f : t.factors) {
        if (f.s < 1) throw DomainError("harmonic factor order s must be >= 1");
        if (f.p <= 0 && f.s != 1) throw DomainError("power-sum factors (p <= 0) need s = 1");
    }
    for (int r : t.shifts)
        if (r < 1) throw DomainError("denominator shifts must be >= 1");
    if (t.m < 0) throw DomainError("n^{-m} needs m >= 0");
}

}  // namespace

BigRational Summand::exact_term(std::uint64_t n) const {
    check_factors(*this);
    if (n == 0) throw DomainError("terms start at n = 1");
    BigRational v = scale;
    for (const auto& f : factors) v *= factor_value(f, n);
    BigRational den = BigRational(BigInt(static_cast<unsigned long>(n))).pow(static_cast<unsigned>(m));
    for (int r : shifts) den *= BigRational(BigInt(static_cast<unsigned long>(n + static_cast<std::uint64_t>(r))));
    return v / den;
}

BigRational Summand::exact_partial_sum(std::uint64_t n) const {
    BigRational acc;
    for (std::uint64_t j = 1; j <= n; ++j) {
        if (alternating && j % 2 == 0)
            acc -= exact_term(j);
        else
            acc += exact_term(j);
    }
    return acc;
}

void Summand::check_convergent() const {
    check_factors(*this);
    int growth = 0;
    for (const auto& f : factors) growth += (f.p >= 1) ? f.s - 1 : 1 - f.p;
    const int decay = m + static_cast<int>(shifts.size()) - growth;
    if (!alternating && decay < 2) throw DivergenceError("positive series diverges: terms decay no faster than 1/n");
    if (alternating && decay < 1) throw DivergenceError("alternating series diverges: terms do not tend to zero");
}

std::string Summand::describe() const {
    std::ostringstream os;
    os << (alternating ? "(-1)^{n+1} " : "") << scale.to_string();
    for (const auto& f : factors) os << " H_n^(" << f.p << "," << f.s << ")";
    os << " / (n^" << m;
    for (int r : shifts) os << " (n+" << r << ")";
    os << ")";
    return os.str();
}

namespace {

// C(x - j + s - 1, s - 1) = sum d[a][b] x^a j^b
std::map<std::pair<int, int>, BigRational> binomial_kernel(int s) {
    std::map<std::pair<int, int>, BigRational> poly{{{0, 0}, BigRational(1)}};
    for (int i = 1; i <= s - 1; ++i) {
        std::map<std::pair<int, int>, BigRational> next;
        for (const auto& [ab, c] : poly) {
            next[{ab.first + 1, ab.second}] += c;
            next[{ab.first, ab.second + 1}] -= c;
            next[ab] += c * BigRational(i);
        }
        poly = std::move(next);
    }
    const BigRational inv = BigRational(factorial(static_cast<unsigned>(s - 1))).inverse();
    for (auto& [ab, c] : poly) c *= inv;
    return poly;
}

class SeriesRunner {
public:
    explicit SeriesRunner(const Summand& t) : t_(t), scale_(to_real(t.scale)) {
        exact_limit_ = static_cast<std::uint64_t>(std::max<std::int64_t>(0, config().exact_terms));
        for (const auto& f : t_.factors) {
            levels_.emplace_back(static_cast<std::size_t>(f.s), Real(0));
            std::vector<std::tuple<int, int, Real>> expansion;
            if (f.p >= 1) {
                for (const auto& [ab, c] : binomial_kernel(f.s)) {
                    if (c.is_zero()) continue;
                    expansion.emplace_back(ab.first, f.p - ab.second, to_real(c));
                    orders_.insert(f.p - ab.second);
                }
            } else {
                expansion.emplace_back(0, f.p, Real(1));
                orders_.insert(f.p);
            }
            expansions_.push_back(std::move(expansion));
        }
        for (int q : orders_) running_[q] = Real(0);
    }

    std::uint64_t n() const { return n_; }

    // Advances to n+1 and returns the unsigned term there.
    Real step() {
        ++n_;
        const Real x(n_);
        for (auto& [q, h] : running_) h += pow(x, -q);
        for (std::size_t i = 0; i < t_.factors.size(); ++i) {
            const auto& f = t_.factors[i];
            auto& lv = levels_[i];
            lv[0] += pow(x, -f.p);
            for (std::size_t l = 1; l < lv.size(); ++l) lv[l] += lv[l - 1];
        }
        if (n_ <= exact_limit_) return to_real(t_.exact_term(n_));
        Real v = scale_;
        for (const auto& lv : levels_) v *= lv.back();
        return v / denominator(x);
    }

    // Continuation of the unsigned term to real x, anchored at the current n.
    std::function<Real(const Real&)> continuation() const {
        std::map<int, HarmonicContinuation> cont;
        for (const auto& [q, h] : running_) cont.emplace(q, HarmonicContinuation(q, static_cast<std::int64_t>(n_), h));
        return [this, cont = std::move(cont)](const Real& x) {
            Real v = scale_;
            for (const auto& expansion : expansions_) {
                Real fv = 0;
                for (const auto& [a, q, d] : expansion) fv += d * pow(x, a) * cont.at(q)(x);
                v *= fv;
            }
            return Real(v / denominator(x));
        };
    }

private:
    Real denominator(const Real& x) const {
        Real den = pow(x, t_.m);
        for (int r : t_.shifts) den *= x + r;
        return den;
    }

    const Summand& t_;
    Real scale_;
    std::uint64_t exact_limit_ = 0;
    std::uint64_t n_ = 0;
    std::vector<std::vector<Real>> levels_;
    std::vector<std::vector<std::tuple<int, int, Real>>> expansions_;
    std::set<int> orders_;
    std::map<int, Real> running_;
};

// sum_{n > N} f(n) by the midpoint Euler-Maclaurin formula at a = N + 1/2.
Approx midpoint_tail(const std::function<Real(const Real&)>& f, std::uint64_t N, double tol) {
    const Real a = Real(N) + Real(0.5);
    // integral over [a, inf) with x = a/u
    const Integrand g = [&](const Real& u, const Real& from0, const Real&) {
        (void)u;
        const Real x = a / from0;
        return Real(f(x) * a / (from0 * from0));
    };
    const Approx integral = tanh_sinh(g, Real(0), Real(1), std::max(tol * 1e-4, 1e-45));
    std::vector<Real> xs;
    std::vector<Real> fs;
    for (int i = -4; i <= 4; ++i) {
        xs.push_back(a + i);
        fs.push_back(f(xs.back()));
    }
    const auto w = fornberg_weights(a, xs, 5);
    auto deriv = [&](int k) {
        Real acc = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) acc += w[static_cast<std::size_t>(k)][i] * fs[i];
        return acc;
    };
    Real v = integral.value + deriv(1) / 24 - 7 * deriv(3) / 5760 + 31 * deriv(5) / 967680;
    return Approx(std::move(v), integral.err);
}

OracleResult positive_sum(const Summand& t, const OracleOptions& opts, std::int64_t max_terms, std::int64_t head) {
    OracleResult out;
    SeriesRunner run(t);
    Real partial = 0;
    std::uint64_t checkpoint = static_cast<std::uint64_t>(std::min(head, std::max<std::int64_t>(1, max_terms / 2)));
    bool have_prev = false;
    Approx prev;
    for (;;) {
        while (run.n() < checkpoint) {
            const Real term = run.step();
            if (term <= 0) out.monotone = false;
            partial += term;
        }
        const Approx tail = midpoint_tail(run.continuation(), checkpoint, opts.tol);
        Real value = partial + tail.value;
        if (tail.value < 0) out.monotone = false;
        const double rounding = 10.0 * static_cast<double>(checkpoint) * abs_double(value) * working_epsilon();
        if (have_prev) {
            const double err = abs_double(value - prev.value) + tail.err + prev.err + rounding;
            out.value = Approx(value, err, static_cast<std::int64_t>(checkpoint));
            out.terms = static_cast<std::int64_t>(checkpoint);
            out.last_partial = partial;
            const bool more = static_cast<std::int64_t>(2 * checkpoint) <= max_terms;
            if (err <= opts.tol || !more) {
                out.converged = err <= opts.tol;
                return out;
            }
        }
        prev = Approx(value, tail.err + rounding);
        have_prev = true;
        checkpoint *= 2;
        if (static_cast<std::int64_t>(checkpoint) > max_terms) {
            // No room for a second level: report the single estimate with its tail as the error.
            out.value = Approx(prev.value, abs_double(tail.value) + prev.err, run.n());
            out.terms = static_cast<std::int64_t>(run.n());
            out.last_partial = partial;
            out.converged = false;
            return out;
        }
    }
}

OracleResult alternating_sum(const Summand& t, const OracleOptions& opts, std::int64_t max_terms) {
    OracleResult out;
    int depth = opts.depth > 0 ? opts.depth : cvz_default_depth();
    depth = static_cast<int>(std::min<std::int64_t>(depth, max_terms / 2));
    if (depth < 1) throw DomainError("max_terms too small for alternating acceleration");
    SeriesRunner run(t);
    std::vector<Real> a;
    std::vector<Real> partials{Real(0)};
    for (;;) {
        while (static_cast<int>(a.size()) < 2 * depth) {
            a.push_back(run.step());
            const Real& last = a.back();
            partials.push_back(a.size() % 2 == 1 ? Real(partials.back() + last) : Real(partials.back() - last));
        }
        out.value = cvz_sum(std::vector<Real>(a.begin(), a.begin() + 2 * depth));
        out.terms = 2 * depth;
        out.converged = out.value.err <= opts.tol;
        if (out.converged || 4 * static_cast<std::int64_t>(depth) > max_terms) break;
        depth *= 2;
    }
    // Consecutive raw partial sums must enclose the limit.
    out.bracketed = true;
    const std::size_t top = static_cast<std::size_t>(2 * depth);
    for (std::size_t n = top >= 4 ? top - 4 : 1; n < top; ++n) {
        const Real lo = partials[n] < partials[n + 1] ? partials[n] : partials[n + 1];
        const Real hi = partials[n] < partials[n + 1] ? partials[n + 1] : partials[n];
        const Real slack = Real(out.value.err);
        if (out.value.value < lo - slack || out.value.value > hi + slack) out.bracketed = false;
    }
    out.last_partial = partials[top];
    return out;
}

}  // namespace

OracleResult oracle_sum(const Summand& summand, const OracleOptions& opts) {
    const auto& cfg = config();
    summand.check_convergent();
    if (!(opts.tol > 0)) throw DomainError("oracle tolerance must be > 0");
    const std::int64_t max_terms = opts.max_terms > 0 ? opts.max_terms : cfg.oracle_max_terms;
    const std::int64_t head = opts.head > 0 ? opts.head : cfg.oracle_head;
    if (summand.alternating) return alternating_sum(summand, opts, max_terms);
    return positive_sum(summand, opts, max_terms, head);
}

Approx oracle_series(const SumSpec& spec, double tol, std::int64_t max_terms) {
    OracleOptions opts;
    opts.tol = tol;
    opts.max_terms = max_terms;
    return oracle_sum(Summand::from_spec(spec), opts).value;
}

}  // namespace hhsum
