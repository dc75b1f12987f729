#include "skhp/quadrature.hpp"

#include "skhp/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

namespace skhp::quadrature {

void QuadraturePolicy::validate() const {
    if (panel_order < 2 || panel_order > 256) throw DomainError("quadrature: panel_order must be in [2, 256]");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature: tolerances must be positive");
    if (max_panels < 1) throw DomainError("quadrature: max_panels must be >= 1");
    if (!(tail_cut > 0.0) || !(tail_cut < 1.0)) throw DomainError("quadrature: tail_cut must be in (0, 1)");
}

namespace {

constexpr int kMaxOrder = 256;

GaussLegendreRule compute_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    int const half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_order
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double const p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double const dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double const w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[order - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

double apply_rule(GaussLegendreRule const& rule, Integrand const& f, double a, double b) {
    double const mid = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double v = f(mid + half * rule.nodes[i]);
        if (!std::isfinite(v)) {
            throw DomainError("quadrature: integrand is not finite at x = " +
                              std::to_string(mid + half * rule.nodes[i]));
        }
        if (std::abs(v) < 1e-300) v = 0.0;
        sum += rule.weights[i] * v;
    }
    return sum * half;
}

struct Panel {
    double a;
    double b;
    double left;  // estimate on [a, mid]
    double right; // estimate on [mid, b]
    double error;
    double value() const { return left + right; }
};

struct ByError {
    bool operator()(Panel const& x, Panel const& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a; // deterministic tie-break: leftmost first
    }
};

Panel make_panel(GaussLegendreRule const& rule, Integrand const& f, double a, double b, double whole) {
    double const mid = 0.5 * (a + b);
    double const left = apply_rule(rule, f, a, mid);
    double const right = apply_rule(rule, f, mid, b);
    return {a, b, left, right, std::abs(left + right - whole)};
}

} // namespace

GaussLegendreRule const& gauss_legendre_rule(int order) {
    if (order < 2 || order > kMaxOrder) {
        throw DomainError("gauss_legendre_rule: order must be in [2, 256], got " + std::to_string(order));
    }
    static std::array<std::once_flag, kMaxOrder + 1> flags;
    static std::array<std::unique_ptr<GaussLegendreRule>, kMaxOrder + 1> cache;
    std::call_once(flags[order], [order] { cache[order] = std::make_unique<GaussLegendreRule>(compute_rule(order)); });
    return *cache[order];
}

namespace {

// Adaptive refinement; returns the converged panels sorted left to right.
std::vector<Panel> refine(Integrand const& f, double a, double b, int initial_panels, QuadraturePolicy const& policy) {
    policy.validate();
    if (!(a <= b)) throw DomainError("integrate_finite: requires a <= b");
    if (a == b) return {};
    initial_panels = std::max(initial_panels, 1);
    auto const& rule = gauss_legendre_rule(policy.panel_order);
    std::size_t const budget = static_cast<std::size_t>(std::max(policy.max_panels, 4 * initial_panels));

    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    double const width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        double const lo = a + i * width;
        double const hi = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
        queue.push(make_panel(rule, f, lo, hi, apply_rule(rule, f, lo, hi)));
    }

    auto totals = [&queue] {
        auto copy = queue;
        double value = 0.0, error = 0.0;
        while (!copy.empty()) {
            value += copy.top().value();
            error += copy.top().error;
            copy.pop();
        }
        return std::pair{value, error};
    };

    auto [total, error] = totals();
    std::size_t steps = 0;
    while (error > std::max(policy.rel_tol * std::abs(total), policy.abs_tol)) {
        if (queue.size() >= budget) {
            throw NonConvergence("integrate_finite: panel budget exhausted on [" + std::to_string(a) + ", " +
                                     std::to_string(b) + "]",
                                 total, error);
        }
        Panel const worst = queue.top();
        queue.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        Panel const lhs = make_panel(rule, f, worst.a, mid, worst.left);
        Panel const rhs = make_panel(rule, f, mid, worst.b, worst.right);
        total += lhs.value() + rhs.value() - worst.value();
        error += lhs.error + rhs.error - worst.error;
        queue.push(lhs);
        queue.push(rhs);
        if (++steps % 64 == 0) std::tie(total, error) = totals(); // resync running sums
    }

    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](Panel const& x, Panel const& y) { return x.a < y.a; });
    return panels;
}

} // namespace

double integrate_finite(Integrand const& f, double a, double b, QuadraturePolicy const& policy) {
    return integrate_finite(f, a, b, 1, policy);
}

double integrate_finite(Integrand const& f, double a, double b, int initial_panels, QuadraturePolicy const& policy) {
    double sum = 0.0;
    for (auto const& p : refine(f, a, b, initial_panels, policy)) sum += p.value();
    return sum;
}

CompositeRule adaptive_rule(Integrand const& f, double a, double b, int initial_panels,
                            QuadraturePolicy const& policy) {
    auto const panels = refine(f, a, b, initial_panels, policy);
    auto const& rule = gauss_legendre_rule(policy.panel_order);
    CompositeRule out;
    out.nodes.reserve(panels.size() * 2 * rule.nodes.size());
    out.weights.reserve(out.nodes.capacity());
    for (auto const& p : panels) {
        double const mid = 0.5 * (p.a + p.b);
        for (auto const& [lo, hi] : {std::pair{p.a, mid}, std::pair{mid, p.b}}) {
            double const c = 0.5 * (lo + hi);
            double const h = 0.5 * (hi - lo);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                out.nodes.push_back(c + h * rule.nodes[i]);
                out.weights.push_back(h * rule.weights[i]);
            }
        }
    }
    return out;
}

double truncation_radius(Integrand const& f, double decay_rate, QuadraturePolicy const& policy) {
    if (!(decay_rate > 0.0)) throw DomainError("truncation_radius: decay_rate must be positive");
    policy.validate();
    double const base = 50.0 / decay_rate;
    double peak = 0.0;
    constexpr int kSamples = 512;
    for (int i = 1; i <= kSamples; ++i) peak = std::max(peak, std::abs(f(base * i / kSamples)));
    double radius = base;
    double const step = 5.0 / decay_rate;
    for (int i = 0; i < 2000 && std::abs(f(radius)) > policy.tail_cut * peak; ++i) {
        radius += step;
        peak = std::max(peak, std::abs(f(radius)));
    }
    return radius;
}

double integrate_semi_infinite(Integrand const& f, double decay_rate, QuadraturePolicy const& policy) {
    if (!(decay_rate > 0.0)) throw DomainError("integrate_semi_infinite: decay_rate must be positive");
    double const radius = truncation_radius(f, decay_rate, policy);
    return integrate_finite(f, 0.0, radius, 16, policy);
}

double sine_transform(Integrand const& u, double decay_rate, double p, QuadraturePolicy const& policy) {
    if (!(p > 0.0)) throw DomainError("sine_transform: p must be positive");
    double const radius = truncation_radius(u, decay_rate, policy);
    double const quarter = std::numbers::pi / (2.0 * p);
    int const panels = std::max(16, static_cast<int>(std::ceil(radius / quarter)));
    // w(p) can be far below the size of u itself, so the absolute tolerance
    // follows int |u| rather than the (cancelling) result
    QuadraturePolicy loose = policy;
    loose.rel_tol = 1e-6;
    double const mass = integrate_finite([&u](double r) { return std::abs(u(r)); }, 0.0, radius, 16, loose);
    QuadraturePolicy scaled = policy;
    scaled.abs_tol = std::max(policy.abs_tol, 1e-12 * mass);
    auto integrand = [&u, p](double r) { return u(r) * std::sin(p * r); };
    return std::sqrt(2.0 / std::numbers::pi) * integrate_finite(integrand, 0.0, radius, panels, scaled);
}

SineTransformTable::SineTransformTable(Integrand const& u, double decay_rate, double p_max,
                                       QuadraturePolicy const& policy, int order_per_panel)
    : p_max_(p_max), radius_(truncation_radius(u, decay_rate, policy)) {
    if (!(p_max > 0.0)) throw DomainError("SineTransformTable: p_max must be positive");
    auto const& rule = gauss_legendre_rule(order_per_panel);
    double const width_limit = std::min(std::numbers::pi / p_max, radius_ / 64.0);
    panels_ = static_cast<std::size_t>(std::ceil(radius_ / width_limit));
    width_ = radius_ / static_cast<double>(panels_);
    offsets_.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) offsets_[i] = 0.5 * width_ * rule.nodes[i];
    weighted_u_.reserve(panels_ * rule.nodes.size());
    double const scale = std::sqrt(2.0 / std::numbers::pi) * 0.5 * width_;
    for (std::size_t k = 0; k < panels_; ++k) {
        double const mid = (static_cast<double>(k) + 0.5) * width_;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            weighted_u_.push_back(scale * rule.weights[i] * u(mid + offsets_[i]));
        }
    }
}

double SineTransformTable::operator()(double p) const {
    if (p < 0.0 || p > p_max_ * (1.0 + 1e-12)) {
        throw DomainError("SineTransformTable: p outside [0, p_max]");
    }
    // sin(p (c + d)) = sin(pc) cos(pd) + cos(pc) sin(pd); the panel centres c
    // advance by a fixed rotation, re-seeded exactly every kReseed panels
    constexpr std::size_t kReseed = 64;
    std::size_t const order = offsets_.size();
    std::vector<double> cos_d(order), sin_d(order);
    for (std::size_t i = 0; i < order; ++i) {
        cos_d[i] = std::cos(p * offsets_[i]);
        sin_d[i] = std::sin(p * offsets_[i]);
    }
    double const step_c = std::cos(p * width_);
    double const step_s = std::sin(p * width_);
    double sum = 0.0;
    double sc = 0.0, cc = 1.0;
    for (std::size_t k = 0; k < panels_; ++k) {
        if (k % kReseed == 0) {
            double const centre = (static_cast<double>(k) + 0.5) * width_;
            sc = std::sin(p * centre);
            cc = std::cos(p * centre);
        }
        double const* w = weighted_u_.data() + k * order;
        double even = 0.0, odd = 0.0;
        for (std::size_t i = 0; i < order; ++i) {
            even += w[i] * cos_d[i];
            odd += w[i] * sin_d[i];
        }
        sum += sc * even + cc * odd;
        double const next_s = sc * step_c + cc * step_s;
        cc = cc * step_c - sc * step_s;
        sc = next_s;
    }
    return sum;
}

} // namespace skhp::quadrature
