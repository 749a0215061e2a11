#include "shellflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "shellflow/errors.hpp"

namespace shellflow {

namespace {

GaussRule build_gauss_rule(int order) {
    // Newton iteration on Legendre polynomials (nodes are symmetric).
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

double panel_sum(const std::function<double(double)>& f, const GaussRule& rule,
                 double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

struct Panel {
    double a, b;
    double value;  // refined estimate (left + right halves)
    double error;  // |whole - (left + right)|
    double left, right;
};

Panel make_panel(const std::function<double(double)>& f, const GaussRule& rule,
                 double a, double b) {
    Panel p;
    p.a = a;
    p.b = b;
    const double whole = panel_sum(f, rule, a, b);
    const double mid = 0.5 * (a + b);
    p.left = panel_sum(f, rule, a, mid);
    p.right = panel_sum(f, rule, mid, b);
    p.value = p.left + p.right;
    p.error = std::abs(whole - p.value);
    return p;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 2) throw std::domain_error("gauss_legendre: order must be >= 2");
    thread_local std::map<int, GaussRule> cache;
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build_gauss_rule(order)).first;
    }
    return it->second;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& breakpoints,
                              int order, double abs_tol, double rel_tol,
                              int max_panels) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    }
    const GaussRule& rule = gauss_legendre(order);

    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

    double total = 0.0;
    double total_err = 0.0;
    int panels = 0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Panel p = make_panel(f, rule, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        total_err += p.error;
        queue.push(p);
        ++panels;
    }

    auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

    while (total_err > tolerance() && !queue.empty()) {
        if (panels >= max_panels) {
            throw QuadratureError("integrate_adaptive: panel budget exhausted", total,
                                  total_err);
        }
        Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval no longer splittable in double precision; keep as is.
            total += worst.value;
            total_err += worst.error;
            if (queue.empty() || queue.top().error <= 0.0) break;
            continue;
        }
        for (const auto& half : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            Panel p = make_panel(f, rule, half.first, half.second);
            total += p.value;
            total_err += p.error;
            queue.push(p);
        }
        ++panels;
    }

    return {total, total_err};
}

std::vector<double> graded_breakpoints(double upper, double finest) {
    std::vector<double> pts{0.0};
    finest = std::max(finest, upper * 1e-15);
    std::vector<double> desc;
    for (double edge = upper; edge > finest; edge *= 0.5) {
        desc.push_back(edge);
    }
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) pts.push_back(*it);
    if (pts.size() < 2) pts.push_back(upper);
    return pts;
}

}  // namespace shellflow
