#include "snc/surface.hpp"

#include <algorithm>
#include <set>

#include "snc/errors.hpp"

namespace snc {

namespace {

int perm_sign(const std::array<int, 3>& p) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) s = -s;
        }
    return s;
}

bool is_perm012(const std::array<int, 3>& p) {
    std::array<int, 3> q = p;
    std::sort(q.begin(), q.end());
    return q == std::array<int, 3>{0, 1, 2};
}

} // namespace

std::size_t Component::base_rank() const {
    return class_basis.size() - static_cast<std::size_t>(blowup_count);
}

bool Component::has_form() const {
    return kind != ComponentKind::Declared || declared_form.has_value();
}

Component Component::projective_plane(std::string id, int preblown) {
    Component c;
    c.id = std::move(id);
    c.kind = ComponentKind::ProjectivePlane;
    c.class_basis = {"H"};
    c.canonical_class = {-3};
    c.euler_char = 3;
    for (int k = 0; k < preblown; ++k) {
        c.class_basis.push_back("E" + std::to_string(k + 1));
        c.canonical_class.push_back(1);
        ++c.euler_char;
        ++c.blowup_count;
    }
    return c;
}

Component Component::quadric(std::string id) {
    Component c;
    c.id = std::move(id);
    c.kind = ComponentKind::Quadric;
    c.class_basis = {"A", "B"};
    c.canonical_class = {-2, -2};
    c.euler_char = 4;
    return c;
}

Component Component::ruled_elliptic(std::string id, long long d, CurveGeometry base) {
    Component c;
    c.id = std::move(id);
    c.kind = ComponentKind::RuledElliptic;
    c.ruled_degree = d;
    c.base = base;
    c.class_basis = {"D0", "Dinf"};
    c.canonical_class = {-1, -1};
    c.euler_char = 0;
    return c;
}

Component Component::declared(std::string id, std::vector<std::string> basis,
                              std::vector<long long> canonical, long long euler,
                              std::optional<std::vector<std::vector<long long>>> form) {
    Component c;
    c.id = std::move(id);
    c.kind = ComponentKind::Declared;
    c.class_basis = std::move(basis);
    c.canonical_class = std::move(canonical);
    c.euler_char = euler;
    c.declared_form = std::move(form);
    return c;
}

long long intersection_pairing(const Component& c, const std::vector<long long>& u,
                               const std::vector<long long>& v) {
    const std::size_t n = c.class_basis.size();
    if (u.size() != n || v.size() != n)
        throw Error("class vector length mismatch on component '" + c.id + "'");
    const std::size_t base = c.base_rank();
    long long total = 0;

    switch (c.kind) {
    case ComponentKind::ProjectivePlane:
        total += u[0] * v[0];
        break;
    case ComponentKind::Quadric:
        total += u[0] * v[1] + u[1] * v[0];
        break;
    case ComponentKind::RuledElliptic:
        total += c.ruled_degree * (u[0] * v[0] - u[1] * v[1]);
        break;
    case ComponentKind::Declared: {
        if (!c.declared_form)
            throw UndefinedForm("component '" + c.id + "' has no intersection form");
        const auto& m = *c.declared_form;
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = 0; j < base; ++j)
                total += m[i][j] * u[i] * v[j];
        break;
    }
    }
    for (std::size_t k = base; k < n; ++k)
        total -= u[k] * v[k];
    return total;
}

long long self_intersection(const Component& c, const std::vector<long long>& curve_class) {
    return intersection_pairing(c, curve_class, curve_class);
}

int TriplePoint::sigma_at(std::array<int, 3> perm) const {
    int sp = perm_sign(perm);
    if (sp == 0) throw Error("repeated index in sigma lookup at '" + id + "'");
    if (sigma.empty()) return sp;
    const auto& [key, val] = *sigma.begin();
    return sp * perm_sign(key) * val;
}

const Component* SncSurface::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

Component* SncSurface::find_component(const std::string& id) {
    for (auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const DoubleCurve* SncSurface::find_curve(const std::string& id) const {
    for (const auto& d : double_curves)
        if (d.id == id) return &d;
    return nullptr;
}

DoubleCurve* SncSurface::find_curve(const std::string& id) {
    for (auto& d : double_curves)
        if (d.id == id) return &d;
    return nullptr;
}

const TriplePoint* SncSurface::find_triple(const std::string& id) const {
    for (const auto& t : triple_points)
        if (t.id == id) return &t;
    return nullptr;
}

int SncSurface::epsilon(const std::string& comp_i, const std::string& comp_j) const {
    std::ptrdiff_t i = -1, j = -1;
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (components[k].id == comp_i) i = static_cast<std::ptrdiff_t>(k);
        if (components[k].id == comp_j) j = static_cast<std::ptrdiff_t>(k);
    }
    if (i < 0 || j < 0 || i == j)
        throw Error("epsilon: bad component pair (" + comp_i + ", " + comp_j + ")");
    return j > i ? 1 : -1;
}

std::vector<std::string> validate_structure(const SncSurface& surface) {
    std::vector<std::string> diags;
    auto bad = [&diags](std::string msg) { diags.push_back(std::move(msg)); };

    std::set<std::string> comp_ids, curve_ids, triple_ids;
    for (const auto& c : surface.components) {
        if (!comp_ids.insert(c.id).second) bad("duplicate component id '" + c.id + "'");
        if (c.class_basis.size() != c.canonical_class.size())
            bad("canonical class length mismatch on component '" + c.id + "'");
        if (c.blowup_count < 0 ||
            static_cast<std::size_t>(c.blowup_count) > c.class_basis.size())
            bad("bad blowup count on component '" + c.id + "'");
        long long base_euler = c.euler_char - c.blowup_count;
        switch (c.kind) {
        case ComponentKind::ProjectivePlane:
            if (base_euler != 3 || c.base_rank() != 1)
                bad("projective plane invariants violated on component '" + c.id + "'");
            break;
        case ComponentKind::Quadric:
            if (base_euler != 4 || c.base_rank() != 2)
                bad("quadric invariants violated on component '" + c.id + "'");
            break;
        case ComponentKind::RuledElliptic:
            if (base_euler != 0 || c.base_rank() != 2)
                bad("ruled surface invariants violated on component '" + c.id + "'");
            if (c.base.genus != 1)
                bad("ruled component '" + c.id + "' must have an elliptic base");
            break;
        case ComponentKind::Declared:
            if (c.declared_form && (*c.declared_form).size() != c.base_rank())
                bad("declared form rank mismatch on component '" + c.id + "'");
            break;
        }
    }
    for (const auto& d : surface.double_curves)
        if (!curve_ids.insert(d.id).second) bad("duplicate double curve id '" + d.id + "'");
    for (const auto& t : surface.triple_points)
        if (!triple_ids.insert(t.id).second) bad("duplicate triple point id '" + t.id + "'");

    for (const auto& d : surface.double_curves) {
        if (d.geometry.genus != 0 && d.geometry.genus != 1)
            bad("double curve '" + d.id + "' has genus outside {0,1}");
        if (d.geometry.genus == 1 && d.geometry.tau.im == Rational(0))
            bad("double curve '" + d.id + "' has a degenerate lattice (Im tau = 0)");
        if (d.sides.size() != 2)
            bad("double curve '" + d.id + "' requires two sides");

        std::set<std::pair<std::string, std::string>> side_keys;
        for (const auto& s : d.sides) {
            if (!side_keys.insert({s.component, s.label}).second)
                bad("double curve '" + d.id + "' repeats side (" + s.component + ", " +
                    s.label + ")");
            const Component* c = surface.find_component(s.component);
            if (!c) {
                bad("double curve '" + d.id + "' references missing component '" +
                    s.component + "'");
                continue;
            }
            if (s.curve_class.size() != c->class_basis.size()) {
                bad("double curve '" + d.id + "' has a class vector of wrong length on '" +
                    s.component + "'");
                continue;
            }
            if (s.normal_class.genus != d.geometry.genus)
                bad("normal class genus mismatch on curve '" + d.id + "' side '" +
                    s.component + "'");
            if (c->has_form() &&
                self_intersection(*c, s.curve_class) != s.normal_class.degree)
                bad("normal degree of curve '" + d.id + "' on '" + s.component +
                    "' disagrees with the self-intersection number");
        }

        for (std::size_t i = 0; i < d.triple_marks.size(); ++i) {
            const auto& m = d.triple_marks[i];
            if (!triple_ids.count(m.triple_point))
                bad("curve '" + d.id + "' marks missing triple point '" + m.triple_point + "'");
            if (d.geometry.genus == 1 && !m.location.has_coords)
                bad("curve '" + d.id + "' has a genus-1 triple mark without coordinates");
            for (std::size_t j = i + 1; j < d.triple_marks.size(); ++j)
                if (m.location == d.triple_marks[j].location)
                    bad("curve '" + d.id + "' has coincident triple marks ('" +
                        m.triple_point + "', '" + d.triple_marks[j].triple_point + "')");
        }
    }

    for (const auto& t : surface.triple_points) {
        if (t.incident.size() != 3)
            bad("triple point '" + t.id + "' must have exactly three incident components");
        std::set<std::string> comps;
        for (const auto& inc : t.incident) {
            if (!comp_ids.count(inc.component))
                bad("triple point '" + t.id + "' references missing component '" +
                    inc.component + "'");
            if (!comps.insert(inc.component).second)
                bad("four local branches meet at triple point '" + t.id +
                    "' (component '" + inc.component + "' repeated)");
            for (const auto& cid : inc.curves) {
                const DoubleCurve* d = surface.find_curve(cid);
                if (!d) {
                    bad("triple point '" + t.id + "' references missing curve '" + cid + "'");
                    continue;
                }
                bool marked = std::any_of(d->triple_marks.begin(), d->triple_marks.end(),
                                          [&](const TripleMark& m) {
                                              return m.triple_point == t.id;
                                          });
                if (!marked)
                    bad("curve '" + cid + "' does not mark triple point '" + t.id + "'");
            }
            if (inc.curves[0] == inc.curves[1])
                bad("triple point '" + t.id + "' lists the same curve twice on '" +
                    inc.component + "'");
        }

        // Alternation: every stored pair of sigma entries must be consistent.
        for (const auto& [p, v] : t.sigma) {
            if (!is_perm012(p)) {
                bad("sigma key is not a permutation at triple point '" + t.id + "'");
                continue;
            }
            if (v != 1 && v != -1)
                bad("sigma value outside {+1,-1} at triple point '" + t.id + "'");
            for (const auto& [q, w] : t.sigma)
                if (is_perm012(q) && v * perm_sign(p) != w * perm_sign(q)) {
                    bad("sigma not alternating at triple point '" + t.id + "'");
                    break;
                }
        }

        // Incidence closure: exactly three double curves mark this point.
        int refs = 0;
        for (const auto& d : surface.double_curves)
            for (const auto& m : d.triple_marks)
                if (m.triple_point == t.id) ++refs;
        if (refs != 3)
            bad("triple point '" + t.id + "' is marked by " + std::to_string(refs) +
                " double curves, expected 3");
    }

    std::sort(diags.begin(), diags.end());
    diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
    return diags;
}

} // namespace snc
