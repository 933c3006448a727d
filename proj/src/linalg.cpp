#include "lieclass/linalg.hpp"

namespace lieclass {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        RatFunc inv = m[r][c].inverse();
        for (size_t cc = c; cc < cols; ++cc) m[r][cc] = m[r][cc] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RatFunc f = m[i][c];
            for (size_t cc = c; cc < cols; ++cc) m[i][cc] = m[i][cc] - f * m[r][cc];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

std::optional<Row> solve(Mat a, Row b) {
    if (a.empty()) {
        for (auto& v : b)
            if (!v.is_zero()) return std::nullopt;
        return Row{};
    }
    size_t rows = a.size(), cols = a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> piv = rref(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!piv.empty() && piv.back() == int(cols)) return std::nullopt;
    Row x(cols, RatFunc());
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = a[k][cols];
    return x;
}

std::vector<Row> nullspace(Mat a) {
    std::vector<Row> basis;
    if (a.empty()) return basis;
    size_t cols = a[0].size();
    std::vector<int> piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Row v(cols, RatFunc());
        v[f] = RatFunc(1);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lieclass
