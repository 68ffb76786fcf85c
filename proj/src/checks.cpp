#include "snc/checks.hpp"

#include <algorithm>

#include "snc/errors.hpp"

namespace snc {

CollectiveNormalClass collective_normal_class(const SncSurface& surface) {
    CollectiveNormalClass out;
    for (const auto& d : surface.double_curves) {
        LineBundleClass total = d.geometry.genus == 0
                                    ? LineBundleClass::rational_curve(0)
                                    : LineBundleClass::elliptic(0);
        for (const auto& s : d.sides)
            total = tensor(total, s.normal_class);
        for (const auto& m : d.triple_marks)
            total = tensor(total, point_class(d.geometry.genus, m.location));
        out.per_curve[d.id] = total;
    }
    return out;
}

DSemistability is_d_semistable(const SncSurface& surface) {
    CollectiveNormalClass collective = collective_normal_class(surface);
    DSemistability result;
    result.ok = true;
    for (const auto& [id, cls] : collective.per_curve)
        if (!is_trivial(cls)) {
            result.ok = false;
            result.nontrivial_curves.push_back(id);
        }
    std::sort(result.nontrivial_curves.begin(), result.nontrivial_curves.end());
    return result;
}

std::map<std::string, AnticanonicalVerdict> check_anticanonical(const SncSurface& surface) {
    std::map<std::string, AnticanonicalVerdict> out;
    for (const auto& c : surface.components) {
        if (c.kind == ComponentKind::Declared && c.canonical_class.empty()) {
            out[c.id] = AnticanonicalVerdict::Unverifiable;
            continue;
        }
        std::vector<long long> total = c.canonical_class;
        for (const auto& d : surface.double_curves)
            for (const auto& s : d.sides) {
                if (s.component != c.id) continue;
                if (s.curve_class.size() != total.size())
                    throw Error("class vector length mismatch on component '" + c.id + "'");
                for (std::size_t k = 0; k < total.size(); ++k)
                    total[k] += s.curve_class[k];
            }
        bool zero = std::all_of(total.begin(), total.end(),
                                [](long long v) { return v == 0; });
        out[c.id] = zero ? AnticanonicalVerdict::Holds : AnticanonicalVerdict::Fails;
    }
    return out;
}

RhoMatrix build_rho_matrix(const SncSurface& surface) {
    RhoMatrix m;
    for (const auto& c : surface.components) m.column_ids.push_back(c.id);
    auto column = [&m](const std::string& id) {
        for (std::size_t i = 0; i < m.column_ids.size(); ++i)
            if (m.column_ids[i] == id) return i;
        throw Error("rho matrix: unknown component '" + id + "'");
    };

    for (const auto& d : surface.double_curves) {
        if (!d.twist)
            throw MissingTwist("double curve '" + d.id + "' carries no gluing twist");
        if (d.sides.size() != 2)
            throw Error("double curve '" + d.id + "' requires two sides");
        std::vector<GaussianRational> row(m.column_ids.size(), GaussianRational{});
        std::size_t ci = column(d.sides[0].component);
        std::size_t cj = column(d.sides[1].component);
        row[ci] = row[ci] + GaussianRational(Rational(1));
        row[cj] = row[cj] + d.twist->residue_factor;
        m.rows.push_back(std::move(row));
        m.row_ids.push_back(d.id);
    }
    return m;
}

namespace {

/// Row echelon over the Gaussian rationals; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::vector<GaussianRational>>& rows,
                                   std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        GaussianRational inv = GaussianRational(Rational(1)) / rows[r][col];
        for (std::size_t c = col; c < ncols; ++c) rows[r][c] = rows[r][c] * inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][col].is_zero()) continue;
            GaussianRational f = rows[k][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[k][c] = rows[k][c] - f * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const RhoMatrix& m) {
    auto rows = m.rows;
    return eliminate(rows, m.column_ids.size()).size();
}

std::vector<std::vector<GaussianRational>> kernel_basis(const RhoMatrix& m) {
    const std::size_t n = m.column_ids.size();
    auto rows = m.rows;
    std::vector<std::size_t> pivots = eliminate(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(n, GaussianRational{});
        v[free] = GaussianRational(Rational(1));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t h0_canonical_dimension(const SncSurface& surface) {
    RhoMatrix m = build_rho_matrix(surface);
    return m.column_ids.size() - rank(m);
}

bool check_residue_matching(const SncSurface& surface) {
    RhoMatrix m = build_rho_matrix(surface);
    for (const auto& row : m.rows) {
        GaussianRational sum;
        for (const auto& e : row) sum = sum + e;
        if (!sum.is_zero()) return false;
    }
    return true;
}

} // namespace snc
