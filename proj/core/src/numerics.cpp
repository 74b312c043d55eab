#include "clausen/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace clausen {

void Precision::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("Precision: abs_tol must be > 0");
    if (!(quad_tol > 0.0)) throw std::invalid_argument("Precision: quad_tol must be > 0");
    if (max_terms < 8) throw std::invalid_argument("Precision: max_terms must be >= 8");
}

double compensated_sum(std::span<const double> terms) {
    CompensatedAccumulator acc;
    for (double x : terms) acc.add(x);
    return acc.value();
}

namespace {

// B_2 .. B_30 (odd Bernoulli numbers beyond B_1 vanish).
constexpr std::array<Rational, 15> kBernoulliEven{{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029LL, 870},
    {8615841276005LL, 14322},
}};

double pow_int_neg(double k, int s) {
    // 1/k^s for small s without libm pow in the hot path
    const double inv = 1.0 / k;
    switch (s) {
        case 2: return inv * inv;
        case 3: return inv * inv * inv;
        case 4: {
            const double i2 = inv * inv;
            return i2 * i2;
        }
        case 5: {
            const double i2 = inv * inv;
            return i2 * i2 * inv;
        }
        default: return std::pow(inv, static_cast<double>(s));
    }
}

}  // namespace

Rational bernoulli_even(int m) {
    if (m < 1 || m > 15) throw std::domain_error("bernoulli_even: require 1 <= m <= 15");
    return kBernoulliEven[static_cast<std::size_t>(m - 1)];
}

EvalResult zeta_int_series(int s, const Precision& prec) {
    prec.validate();
    if (s < 2) throw std::domain_error("zeta_int: require s >= 2");

    // K^{-s} <= abs_tol  gives the sandwich width of the tail-integral route.
    const double kf = std::ceil(std::pow(prec.abs_tol, -1.0 / static_cast<double>(s)));
    const auto K = static_cast<std::int64_t>(std::max(kf, 8.0));
    if (K > prec.max_terms)
        throw ConvergenceError("zeta_int: term budget exhausted before tolerance");

    CompensatedAccumulator acc;
    for (std::int64_t k = K; k >= 1; --k) {
        acc.add(pow_int_neg(static_cast<double>(k), s));
    }
    // tail:  sum_{k>K} k^{-s} <= int_K^inf u^{-s} du = K^{1-s}/(s-1)
    const double Kd = static_cast<double>(K);
    const double tail_int = std::pow(Kd, 1.0 - static_cast<double>(s)) / (s - 1.0);
    const double sandwich = pow_int_neg(Kd, s);

    EvalResult r;
    r.value = acc.value() + tail_int;
    r.err_bound = sandwich + 4e-16;
    r.terms_used = K;
    return r;
}

EvalResult zeta_int(int s, const Precision& prec) {
    prec.validate();
    if (s < 2) throw std::domain_error("zeta_int: require s >= 2");

    if (s % 2 == 0 && s <= 30) {
        const int m = s / 2;
        const Rational b = bernoulli_even(m);
        const double two_pi = 2.0 * std::numbers::pi;
        double fact = 1.0;  // (2m)!
        for (int j = 2; j <= 2 * m; ++j) fact *= j;
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;
        EvalResult r;
        r.value = sign * b.to_double() * std::pow(two_pi, 2.0 * m) / (2.0 * fact);
        r.err_bound = 4e-16 * r.value;
        r.terms_used = 0;
        return r;
    }
    return zeta_int_series(s, prec);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half; QUADPACK values).
constexpr std::array<double, 8> kGK15Nodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double integral = 0.0;
    double error = 0.0;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);

    std::array<double, 15> fv{};
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGK15Nodes[static_cast<std::size_t>(i)];
        fv[static_cast<std::size_t>(i)] = f(c - dx);
        fv[static_cast<std::size_t>(14 - i)] = f(c + dx);
    }

    double resk = kKronrodWeights[7] * fv[7];
    double resabs = std::abs(resk);
    for (int i = 0; i < 7; ++i) {
        const double s = fv[static_cast<std::size_t>(i)] + fv[static_cast<std::size_t>(14 - i)];
        resk += kKronrodWeights[static_cast<std::size_t>(i)] * s;
        resabs += kKronrodWeights[static_cast<std::size_t>(i)] *
                  (std::abs(fv[static_cast<std::size_t>(i)]) +
                   std::abs(fv[static_cast<std::size_t>(14 - i)]));
    }
    double resg = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 3; ++i) {
        resg += kGaussWeights[static_cast<std::size_t>(i)] *
                (fv[static_cast<std::size_t>(2 * i + 1)] + fv[static_cast<std::size_t>(13 - 2 * i)]);
    }

    const double reskh = 0.5 * resk;
    double resasc = kKronrodWeights[7] * std::abs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i) {
        resasc += kKronrodWeights[static_cast<std::size_t>(i)] *
                  (std::abs(fv[static_cast<std::size_t>(i)] - reskh) +
                   std::abs(fv[static_cast<std::size_t>(14 - i)] - reskh));
    }

    double err = std::abs((resk - resg) * h);
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * 1.1e-16 * resabs;
    err = std::max(err, round_floor);

    return Panel{a, b, resk * h, err};
}

}  // namespace

EvalResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              const Precision& prec) {
    prec.validate();
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw std::domain_error("adaptive_integrate: endpoints must be finite");
    }
    if (a > b) throw std::domain_error("adaptive_integrate: require a <= b");
    if (a == b) return EvalResult{0.0, 0.0, 0};

    // Seed partition: geometric chains toward both endpoints so integrable
    // log singularities at a or b start resolved.
    constexpr int kEdgeDepth = 8;
    const double w = b - a;
    std::vector<double> pts;
    pts.push_back(a);
    for (int k = kEdgeDepth; k >= 2; --k) pts.push_back(a + std::ldexp(w, -k));
    pts.push_back(a + 0.5 * w);
    for (int k = 2; k <= kEdgeDepth; ++k) pts.push_back(b - std::ldexp(w, -k));
    pts.push_back(b);

    auto worse = [](const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

    std::int64_t evals = 0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = gk15(f, pts[i], pts[i + 1]);
        evals += 15;
        total_err += p.error;
        queue.push(p);
    }

    constexpr int kMaxPanels = 4000;
    while (total_err > prec.quad_tol && queue.size() < kMaxPanels) {
        Panel worst = queue.top();
        queue.pop();
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel no longer splittable at double precision
            queue.push(worst);
            total_err += worst.error;
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        evals += 30;
        total_err += left.error + right.error;
        queue.push(left);
        queue.push(right);
    }
    if (total_err > prec.quad_tol) {
        throw ConvergenceError("adaptive_integrate: panel budget exhausted before tolerance");
    }

    CompensatedAccumulator acc;
    double err = 0.0;
    while (!queue.empty()) {
        acc.add(queue.top().integral);
        err += queue.top().error;
        queue.pop();
    }
    return EvalResult{acc.value(), err, evals};
}

}  // namespace clausen
