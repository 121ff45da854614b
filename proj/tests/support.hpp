#pragma once

// Shared test support: independent oracles (cofactor charpoly, naive rank),
// deterministic generators, and a CLI runner. Oracles here deliberately avoid
// the library's implementation paths.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "wdlab/action.hpp"
#include "wdlab/models.hpp"
#include "wdlab/poly.hpp"

namespace testsupport {

using namespace wdlab;

// det(xI - M) by cofactor expansion over polynomial entries; exponential, for
// small matrices only.
inline RatPoly cofactor_charpoly(const RatMatrix& m) {
    const Eigen::Index n = m.rows();
    std::vector<std::vector<RatPoly>> a(static_cast<size_t>(n),
                                        std::vector<RatPoly>(static_cast<size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            std::vector<Rational> c = {-m(i, j)};
            if (i == j) c.push_back(1);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = RatPoly(c);
        }
    std::function<RatPoly(std::vector<size_t>, std::vector<size_t>)> det =
        [&](std::vector<size_t> rows, std::vector<size_t> cols) -> RatPoly {
        if (rows.empty()) return RatPoly::constant(Rational(1));
        RatPoly acc;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<size_t> sub_cols;
            for (size_t cc = 0; cc < cols.size(); ++cc)
                if (cc != c) sub_cols.push_back(cols[cc]);
            RatPoly term = a[rows[0]][cols[c]] * det(sub_rows, sub_cols);
            if (c % 2 == 1) term = -term;
            acc = acc + term;
        }
        return acc;
    };
    std::vector<size_t> all(static_cast<size_t>(n));
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return det(all, all);
}

// Plain rational row reduction, independent of the Bareiss path.
inline Eigen::Index naive_rank(RatMatrix m) {
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < m.rows(); ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        m.row(piv).swap(m.row(rank));
        for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col) / m(rank, col);
            m.row(r) -= f * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

inline long long rng_int(std::mt19937& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline RatMatrix random_int_matrix(std::mt19937& rng, Eigen::Index n, long long range = 3) {
    RatMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rational(rng_int(rng, -range, range));
    return m;
}

// Random action respecting the A^j / complement block split on even degrees.
inline CorrespondenceAction random_action(const ModelPtr& model, std::mt19937& rng,
                                          long long range = 3) {
    const VarietyModel& m = *model;
    std::vector<RatMatrix> mats;
    for (int k = 0; k <= 2 * m.n; ++k) {
        const Eigen::Index d = m.dim(k);
        RatMatrix mk = RatMatrix::Zero(d, d);
        if (k % 2 == 1) {
            mk = random_int_matrix(rng, d, range);
        } else {
            const auto& alg = m.algebraic[static_cast<size_t>(k / 2)];
            std::vector<bool> in(static_cast<size_t>(d), false);
            for (auto i : alg) in[static_cast<size_t>(i)] = true;
            std::vector<Eigen::Index> comp;
            for (Eigen::Index i = 0; i < d; ++i)
                if (!in[static_cast<size_t>(i)]) comp.push_back(i);
            for (auto r : alg)
                for (auto c : alg) mk(r, c) = Rational(rng_int(rng, -range, range));
            for (auto r : comp)
                for (auto c : comp) mk(r, c) = Rational(rng_int(rng, -range, range));
        }
        mats.push_back(std::move(mk));
    }
    return make_action(model, std::move(mats), false);
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string cli_binary() {
    const char* env = std::getenv("WDLAB_BIN");
    return env ? env : "./build/wdlab";
}

// Runs the CLI, capturing stdout; stderr goes to /dev/null.
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult res;
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string temp_path(const std::string& name) {
    return "/tmp/wdlab_test_" + name;
}

}  // namespace testsupport
