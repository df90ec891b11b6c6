#include "hypcheck/group.hpp"

#include <algorithm>

namespace hypcheck {

namespace {

AffineExpr P(int arity, int i) { return AffineExpr::param(arity, i); }
AffineExpr N(int arity) { return AffineExpr::n_term(arity); }

const Rational kOne(1);

// The six T-invariance substitutions of (a, b, c), in numbered order.
std::vector<AffineMap> t_relations() {
    const int k = 3;
    auto a = P(k, 0), b = P(k, 1), c = P(k, 2);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({a, b, kOne + a - c}),
        AffineMap({c - b - n, c - a - n, c}),
        AffineMap({c - b - n, c - a - n, kOne - b - n}),
        AffineMap({kOne + a - b - c - n, kOne - c - n, kOne + a - c}),
        AffineMap({kOne + a - b - c - n, kOne - c - n, kOne - b - n}),
    };
}

std::vector<AffineMap> ttilde_relations() {
    const int k = 2;
    auto a = P(k, 0), c = P(k, 1);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({a, kOne + a - c}),
        AffineMap({c - a - n, c}),
        AffineMap({c - a - n, kOne - a - n}),
        AffineMap({kOne - c - n, kOne + a - c}),
        AffineMap({kOne - c - n, kOne - a - n}),
    };
}

std::vector<AffineMap> r_relations() {
    const int k = 3;
    auto a = P(k, 0), b = P(k, 1), c = P(k, 2);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({a, b, a - c - n}),
        AffineMap({kOne + c - b, kOne + c - a, c}),
        AffineMap({kOne + c - b, kOne + c - a, kOne - b - n}),
        AffineMap({kOne + a - b - c - n, kOne - c - n, a - c - n}),
        AffineMap({kOne + a - b - c - n, kOne - c - n, kOne - b - n}),
    };
}

std::vector<AffineMap> rtilde_relations() {
    const int k = 2;
    auto a = P(k, 0), c = P(k, 1);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({a, a - c - n}),
        AffineMap({kOne + c - a, c}),
        AffineMap({kOne + c - a, kOne - a - n}),
        AffineMap({kOne - c - n, a - c - n}),
        AffineMap({kOne - c - n, kOne - a - n}),
    };
}

std::vector<AffineMap> q_relations() {
    const int k = 2;
    auto a = P(k, 0), c = P(k, 1);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({Rational(2) * c - a - n - kOne, c}),
    };
}

std::vector<AffineMap> m_relations() {
    const int k = 2;
    auto a = P(k, 0), c = P(k, 1);
    auto n = N(k);
    return {
        AffineMap::identity(k),
        AffineMap({kOne + Rational(2) * c - a + n, c}),
    };
}

std::vector<std::string> numbered(const std::string& stem, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::vector<FamilyData> build_families() {
    std::vector<FamilyData> fams;
    fams.push_back({Family::T, "T", NamedId::T, {"a", "b", "c"}, numbered("TI", 6),
                    t_relations(), {1, 2}});
    fams.push_back({Family::Ttilde, "Ttilde", NamedId::Ttilde, {"a", "c"}, numbered("TtI", 6),
                    ttilde_relations(), {1, 2}});
    fams.push_back({Family::R, "R", NamedId::R, {"a", "b", "c"}, numbered("RI", 6),
                    r_relations(), {1, 2}});
    fams.push_back({Family::Rtilde, "Rtilde", NamedId::Rtilde, {"a", "c"}, numbered("RtI", 6),
                    rtilde_relations(), {1, 2}});
    fams.push_back({Family::Q, "Q", NamedId::Q, {"a", "c"}, {"identity", "Qinv"},
                    q_relations(), {1}});
    fams.push_back({Family::M, "M", NamedId::M, {"a", "c"}, {"identity", "Minv"},
                    m_relations(), {1}});
    return fams;
}

// Permutations of (x, y, z) in relation-number order, as images: output
// slot i reads input slot image[i].
const std::vector<std::pair<std::string, std::vector<int>>>& s3_perms() {
    static const std::vector<std::pair<std::string, std::vector<int>>> perms = {
        {"xyz", {0, 1, 2}}, {"xzy", {0, 2, 1}}, {"yxz", {1, 0, 2}},
        {"yzx", {1, 2, 0}}, {"zxy", {2, 0, 1}}, {"zyx", {2, 1, 0}},
    };
    return perms;
}

std::vector<SymFamilyData> build_sym_families() {
    std::vector<SymFamilyData> out;
    auto add3 = [&](NamedId sym, Family base, std::string id_prefix, std::string eq_prefix) {
        SymFamilyData d{sym, base, *named(sym).reparam, std::move(id_prefix),
                        std::move(eq_prefix), {}, {}};
        for (const auto& [name, image] : s3_perms()) {
            d.perm_names.push_back(name);
            d.perms.push_back(AffineMap::permutation(image));
        }
        out.push_back(std::move(d));
    };
    add3(NamedId::U, Family::T, "U-sym", "UI");
    add3(NamedId::Utilde, Family::Ttilde, "Ut-sym", "UtI");
    add3(NamedId::V, Family::R, "V-sym", "VI");
    add3(NamedId::Vtilde, Family::Rtilde, "Vt-sym", "VtI");
    auto add2 = [&](NamedId sym, Family base, std::string id_prefix, std::string eq_prefix) {
        SymFamilyData d{sym, base, *named(sym).reparam, std::move(id_prefix),
                        std::move(eq_prefix), {"xy", "yx"}, {}};
        d.perms.push_back(AffineMap::identity(2));
        d.perms.push_back(AffineMap::permutation({1, 0}));
        out.push_back(std::move(d));
    };
    add2(NamedId::W, Family::Q, "W-swap", "Winv");
    add2(NamedId::L, Family::M, "L-swap", "Linv");
    return out;
}

} // namespace

bool GroupTable::is_abelian() const {
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

GroupTable group_with_elements(std::vector<AffineMap> elements) {
    GroupTable g;
    g.table.assign(elements.size(), std::vector<int>(elements.size(), -1));
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = 0; j < elements.size(); ++j) {
            AffineMap prod = compose(elements[i], elements[j]);
            auto it = std::find(elements.begin(), elements.end(), prod);
            if (it == elements.end())
                throw Error("element list is not closed under composition");
            g.table[i][j] = static_cast<int>(it - elements.begin());
        }
    }
    g.elements = std::move(elements);
    g.orders = element_orders(g);
    return g;
}

GroupTable generate_group(const std::vector<AffineMap>& generators, int cap) {
    std::vector<AffineMap> elements;
    if (generators.empty()) throw Error("generate_group needs at least one generator");
    elements.push_back(AffineMap::identity(generators.front().in_arity()));
    auto add = [&](const AffineMap& m) {
        if (std::find(elements.begin(), elements.end(), m) != elements.end()) return false;
        if (static_cast<int>(elements.size()) >= cap) throw ClosureCapError(cap);
        elements.push_back(m);
        return true;
    };
    for (const auto& g : generators) add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j = 0; j < elements.size(); ++j)
                if (add(compose(elements[i], elements[j]))) grew = true;
    }
    return group_with_elements(std::move(elements));
}

std::vector<int> element_orders(const GroupTable& g) {
    const AffineMap id = AffineMap::identity(g.elements.front().in_arity());
    std::vector<int> orders;
    for (const auto& e : g.elements) {
        AffineMap acc = e;
        int ord = 1;
        while (!(acc == id)) {
            acc = compose(acc, e);
            ++ord;
            if (ord > g.order()) throw Error("element order exceeds the group order");
        }
        orders.push_back(ord);
    }
    return orders;
}

GroupLabel classify_group(const GroupTable& g) {
    switch (g.order()) {
        case 1:
            return GroupLabel::trivial;
        case 2:
            return GroupLabel::S2;
        case 6:
            // A group of order 6 is S3 or cyclic; non-abelian settles it.
            if (!g.is_abelian()) return GroupLabel::S3;
            throw UnsupportedOrderError(6);
        default:
            throw UnsupportedOrderError(g.order());
    }
}

std::string group_label_str(GroupLabel label) {
    switch (label) {
        case GroupLabel::trivial:
            return "trivial";
        case GroupLabel::S2:
            return "S2";
        case GroupLabel::S3:
            return "S3";
    }
    return "?";
}

const std::vector<FamilyData>& families() {
    static const std::vector<FamilyData> fams = build_families();
    return fams;
}

const FamilyData& family_data(Family f) {
    for (const auto& d : families())
        if (d.family == f) return d;
    throw Error("unknown family");
}

const FamilyData* find_family(std::string_view name) {
    for (const auto& d : families())
        if (d.name == name) return &d;
    return nullptr;
}

GroupTable family_group(Family f) {
    const FamilyData& d = family_data(f);
    std::vector<AffineMap> gens;
    for (int i : d.generator_indices) gens.push_back(d.relations[static_cast<size_t>(i)]);
    GroupTable generated = generate_group(gens);
    if (generated.order() != static_cast<int>(d.relations.size()))
        throw Error("generated group order differs from the relation list for " + d.name);
    for (const auto& rel : d.relations)
        if (std::find(generated.elements.begin(), generated.elements.end(), rel) ==
            generated.elements.end())
            throw Error("generated group does not contain relation of " + d.name);
    return group_with_elements(d.relations);
}

const std::vector<SymFamilyData>& sym_families() {
    static const std::vector<SymFamilyData> fams = build_sym_families();
    return fams;
}

const SymFamilyData& sym_family(NamedId sym) {
    for (const auto& d : sym_families())
        if (d.sym == sym) return d;
    throw Error("not a symmetric reparameterization");
}

Verdict verify_reparameterization(NamedId sym, int relation_index) {
    const SymFamilyData& d = sym_family(sym);
    const FamilyData& base = family_data(d.base);
    const AffineMap& sigma = d.perms.at(static_cast<size_t>(relation_index));
    const AffineMap& phi = base.relations.at(static_cast<size_t>(relation_index));
    Verdict v;
    v.status = (compose(d.rho, sigma) == compose(phi, d.rho)) ? VerdictStatus::holds
                                                              : VerdictStatus::fails;
    return v;
}

std::string print_group(Family f) {
    const FamilyData& d = family_data(f);
    GroupTable g = family_group(f);
    std::string out = "family " + d.name + " (" + named(d.fn).name + "_n";
    out += "(";
    for (size_t i = 0; i < d.param_names.size(); ++i) {
        if (i) out += ",";
        out += d.param_names[i];
    }
    out += "))\n";
    for (int i = 0; i < g.order(); ++i) {
        out += "  " + d.relation_ids[static_cast<size_t>(i)] + ": " +
               g.elements[static_cast<size_t>(i)].str(d.param_names) + "\n";
    }
    out += "  table (row o column, column applied first):\n";
    for (int i = 0; i < g.order(); ++i) {
        out += "   ";
        for (int j = 0; j < g.order(); ++j) out += " " + std::to_string(g.table[i][j] + 1);
        out += "\n";
    }
    out += "  orders:";
    for (int o : g.orders) out += " " + std::to_string(o);
    out += "\n  classification: " + group_label_str(classify_group(g)) + "\n";
    return out;
}

} // namespace hypcheck
