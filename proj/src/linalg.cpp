#include "tsol/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace tsol {

SymEigen3 sym_eigen3(const Mat3& input) {
    Mat3 a = input;
    Mat3 v = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        double diag = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]);
        if (off <= 1e-300 || off <= 1e-16 * diag) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = std::copysign(1.0, theta) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                Mat3 r = a;
                for (int k = 0; k < 3; ++k) {
                    r[p][k] = c * a[p][k] - s * a[q][k];
                    r[q][k] = s * a[p][k] + c * a[q][k];
                }
                a = r;
                for (int k = 0; k < 3; ++k) {
                    double akp = c * a[k][p] - s * a[k][q];
                    double akq = s * a[k][p] + c * a[k][q];
                    a[k][p] = akp;
                    a[k][q] = akq;
                }
                for (int k = 0; k < 3; ++k) {
                    double vkp = c * v[k][p] - s * v[k][q];
                    double vkq = s * v[k][p] + c * v[k][q];
                    v[k][p] = vkp;
                    v[k][q] = vkq;
                }
            }
        }
    }

    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i][i] < a[j][j]; });

    SymEigen3 out;
    for (int i = 0; i < 3; ++i) {
        out.values[i] = a[order[i]][order[i]];
        for (int k = 0; k < 3; ++k) out.vecs[k][i] = v[k][order[i]];
    }
    return out;
}

bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        double acc = b[col];
        for (int c = col + 1; c < n; ++c) acc -= a[col][c] * b[c];
        b[col] = acc / a[col][col];
    }
    return true;
}

} // namespace tsol
