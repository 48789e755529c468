#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracles {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

double transport_bruteforce(const std::vector<double>& supply,
                            const std::vector<double>& demand,
                            const std::vector<double>& cost) {
    const int a = static_cast<int>(supply.size());
    const int b = static_cast<int>(demand.size());
    const int cells = a * b;
    const int basis_size = a + b - 1;
    if (cells > 20) throw std::invalid_argument("transport_bruteforce: supports too large");

    double best = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < (1 << cells); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != basis_size) continue;

        UnionFind uf(a + b);
        bool acyclic = true;
        for (int e = 0; e < cells && acyclic; ++e)
            if (mask & (1 << e)) acyclic = uf.unite(e / b, a + e % b);
        if (!acyclic) continue;  // spanning tree iff acyclic with a+b-1 edges

        // peel leaves to solve the flows
        std::vector<double> residual(static_cast<std::size_t>(a + b));
        for (int i = 0; i < a; ++i) residual[static_cast<std::size_t>(i)] = supply[static_cast<std::size_t>(i)];
        for (int j = 0; j < b; ++j) residual[static_cast<std::size_t>(a + j)] = demand[static_cast<std::size_t>(j)];
        std::vector<int> arcs;
        for (int e = 0; e < cells; ++e)
            if (mask & (1 << e)) arcs.push_back(e);
        std::vector<double> flow(arcs.size(), 0.0);
        std::vector<bool> solved(arcs.size(), false);
        std::vector<int> degree(static_cast<std::size_t>(a + b), 0);
        for (int e : arcs) {
            ++degree[static_cast<std::size_t>(e / b)];
            ++degree[static_cast<std::size_t>(a + e % b)];
        }
        for (int round = 0; round < basis_size; ++round) {
            int pick = -1, leaf = -1;
            for (std::size_t k = 0; k < arcs.size() && pick < 0; ++k) {
                if (solved[k]) continue;
                const int i = arcs[k] / b, j = a + arcs[k] % b;
                if (degree[static_cast<std::size_t>(i)] == 1) { pick = static_cast<int>(k); leaf = i; }
                else if (degree[static_cast<std::size_t>(j)] == 1) { pick = static_cast<int>(k); leaf = j; }
            }
            if (pick < 0) break;
            const int i = arcs[static_cast<std::size_t>(pick)] / b;
            const int j = a + arcs[static_cast<std::size_t>(pick)] % b;
            const double q = residual[static_cast<std::size_t>(leaf)];
            flow[static_cast<std::size_t>(pick)] = q;
            solved[static_cast<std::size_t>(pick)] = true;
            residual[static_cast<std::size_t>(i)] -= q;
            residual[static_cast<std::size_t>(j)] -= q;
            --degree[static_cast<std::size_t>(i)];
            --degree[static_cast<std::size_t>(j)];
        }

        bool feasible = true;
        double total = 0.0;
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            if (!solved[k] || flow[k] < -1e-12) { feasible = false; break; }
            total += flow[k] * cost[static_cast<std::size_t>(arcs[k])];
        }
        if (feasible) best = std::min(best, total);
    }
    return best;
}

double dense_simplex_max(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double> c) {
    const std::size_t rows = a.size();
    const std::size_t vars = c.size();
    // tableau: rows x (vars + rows + 1); slack basis is feasible since b >= 0
    std::vector<std::vector<double>> t(rows + 1, std::vector<double>(vars + rows + 1, 0.0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < -1e-12) throw std::invalid_argument("dense_simplex_max: needs b >= 0");
        for (std::size_t j = 0; j < vars; ++j) t[i][j] = a[i][j];
        t[i][vars + i] = 1.0;
        t[i].back() = b[i];
    }
    for (std::size_t j = 0; j < vars; ++j) t[rows][j] = -c[j];

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

    const double tol = 1e-11;
    for (long iter = 0;; ++iter) {
        if (iter > 200000) throw std::runtime_error("dense_simplex_max: iteration cap");
        const bool bland = iter > 20000;
        std::size_t enter = vars + rows;
        double best = -tol;
        for (std::size_t j = 0; j < vars + rows; ++j) {
            if (t[rows][j] < best) {
                best = t[rows][j];
                enter = j;
                if (bland) break;
            }
        }
        if (enter == vars + rows) break;

        std::size_t leave = rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] > tol) {
                const double ratio = t[i].back() / t[i][enter];
                if (ratio < best_ratio - 1e-15 ||
                    (bland && ratio < best_ratio + 1e-15 && basis[i] < basis[leave == rows ? i : leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave == rows) throw std::runtime_error("dense_simplex_max: unbounded");

        const double piv = t[leave][enter];
        for (double& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= vars + rows; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return t[rows].back();
}

double dbl_dense_lp(const std::vector<Complex>& mu_points, const std::vector<double>& mu_weights,
                    const std::vector<Complex>& nu_points, const std::vector<double>& nu_weights) {
    std::vector<Complex> pts = mu_points;
    pts.insert(pts.end(), nu_points.begin(), nu_points.end());
    std::vector<double> coeff(pts.size(), 0.0);
    for (std::size_t i = 0; i < mu_points.size(); ++i) coeff[i] += mu_weights[i];
    for (std::size_t j = 0; j < nu_points.size(); ++j)
        coeff[mu_points.size() + j] -= nu_weights[j];

    // f = g - 1 with g in [0,2]; sum coeff = 0 keeps the objective unshifted
    const std::size_t k = pts.size();
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            std::vector<double> row(k, 0.0);
            row[i] = 1.0;
            row[j] = -1.0;
            a.push_back(std::move(row));
            b.push_back(std::abs(pts[i] - pts[j]));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> row(k, 0.0);
        row[i] = 1.0;
        a.push_back(std::move(row));
        b.push_back(2.0);
    }
    return dense_simplex_max(std::move(a), std::move(b), coeff);
}

namespace {

const Real50 kPi50 = boost::math::constants::pi<Real50>();

}  // namespace

double shadow_concentration_log(int n, int m, double r) {
    const Real50 a = Real50(m) / n;
    const Real50 mm = m;
    const Real50 rr = r;
    const Real50 one_plus_eta = sqrt(3 + log(1 / a));
    const Real50 ca = 1 / (128 * kPi50 * one_plus_eta * one_plus_eta);
    const Real50 cpa = 6 + 3 * log(1 / a);
    const Real50 log_main = 2 - ca * mm * mm * rr * rr + 2 * mm * log(mm) + cpa * mm;
    const Real50 log_tail = 1 - log(2 * kPi50) + log(mm / (1 - a)) / 2 - mm;
    const Real50 hi = (std::max)(log_main, log_tail);
    const Real50 lo = (std::min)(log_main, log_tail);
    return static_cast<double>(hi + log1p(exp(lo - hi)));
}

double shadow_edge_log(int n, int m, double eps) {
    const Real50 a = Real50(m) / n;
    const Real50 q = a * (1 + Real50(eps)) * (1 + Real50(eps));
    const Real50 log_pref = 1 - log(2 * kPi50) - log(Real50(n) * a * (1 - a)) / 2 +
                            log(1 - pow(q, m)) - log(1 - q);
    const Real50 log_bracket = (1 - a) * log(1 - q) - (1 - a) * log(1 - a) - a * log(a);
    return static_cast<double>(log_pref + n * log_bracket);
}

double shadow_tail_log(int n, int m) {
    const Real50 a = Real50(m) / n;
    const Real50 mm = m;
    return static_cast<double>(1 - log(2 * kPi50) + log(mm / (1 - a)) / 2 - mm);
}

double shadow_epsilon_threshold(double alpha) {
    const Real50 a = alpha;
    const Real50 power = exp(a / (1 - a) * (log(a) - 1));
    const Real50 squared = (1 - (1 - a) * power) / a;
    return static_cast<double>(sqrt(squared) - 1);
}

double shadow_finite_potential(int n, int m, double abs_z) {
    const Real50 a = Real50(m) / n;
    const Real50 coeff = Real50(n - m - 1) / m;
    return static_cast<double>(-coeff * log(1 - a * Real50(abs_z) * Real50(abs_z)));
}

}  // namespace oracles
