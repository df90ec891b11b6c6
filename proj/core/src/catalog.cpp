#include "hypcheck/catalog.hpp"

#include "hypcheck/group.hpp"
#include "hypcheck/named.hpp"

namespace hypcheck {

namespace {

const Rational kOne(1);
const Rational kTwo(2);
const Rational kHalf(1, 2);

// Parameter/offset shorthand bound to one arity.
struct Vars {
    int k;
    AffineExpr p(int i) const { return AffineExpr::param(k, i); }
    AffineExpr n(Rational coeff = Rational(1)) const { return AffineExpr::n_term(k, coeff); }
    AffineExpr c(Rational v) const { return AffineExpr::constant(k, v); }
};

Side series_side(std::vector<AffineExpr> nums, std::vector<AffineExpr> dens, Rational arg,
                 SumMode mode = SumMode::terminating) {
    Side s;
    s.series.numerators = std::move(nums);
    s.series.denominators = std::move(dens);
    s.series.argument = arg;
    s.series.mode = mode;
    return s;
}

IdentityEntry two_sided(std::string id, std::string anchor, std::vector<std::string> names,
                        Side lhs, Side rhs) {
    IdentityEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.param_names = std::move(names);
    e.body = TwoSides{std::move(lhs), std::move(rhs)};
    return e;
}

IdentityEntry invariance(std::string id, std::string anchor, NamedId fn, const AffineMap& map) {
    const NamedFunction& f = named(fn);
    IdentityEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.param_names = f.param_names;
    e.body = TwoSides{f.side, f.side.substituted(map)};
    return e;
}

// Prop 3.1 instances; parameter order a, c, a_1..a_p, b_1..b_q, x. The
// right side's coefficient and inner-series Pochhammers all sit inside
// (1+a-c)_n, (c)_n and (b_j)_n, which become the entry guards.
IdentityEntry prop31_entry(int p, int q) {
    IdentityEntry e;
    e.id = "P3.1(" + std::to_string(p) + "," + std::to_string(q) + ")";
    e.anchor = "Prop. 3.1, Eq. (1e3P1)";
    e.param_names = {"a", "c"};
    for (int i = 1; i <= p; ++i) e.param_names.push_back("a" + std::to_string(i));
    for (int j = 1; j <= q; ++j) e.param_names.push_back("b" + std::to_string(j));
    e.param_names.push_back("x");
    e.body = Prop31Body{p, q};
    Vars v{static_cast<int>(e.param_names.size())};
    e.extra_guards.push_back({kOne + v.p(0) - v.p(1)});
    e.extra_guards.push_back({v.p(1)});
    for (int j = 0; j < q; ++j) e.extra_guards.push_back({v.p(2 + p + j)});
    return e;
}

void add_family_relations(std::vector<IdentityEntry>& cat, Family fam,
                          const std::string& anchor_prefix) {
    const FamilyData& d = family_data(fam);
    for (size_t k = 0; k < d.relations.size(); ++k)
        cat.push_back(invariance(d.relation_ids[k],
                                 anchor_prefix + "Eq. (" + d.relation_ids[k] + ")", d.fn,
                                 d.relations[k]));
}

void add_sym_relations(std::vector<IdentityEntry>& cat, NamedId sym,
                       const std::string& anchor_prefix) {
    const SymFamilyData& d = sym_family(sym);
    for (size_t k = 0; k < d.perms.size(); ++k)
        cat.push_back(invariance(d.id_prefix + "(" + d.perm_names[k] + ")",
                                 anchor_prefix + "Eq. (" + d.eq_prefix + std::to_string(k + 1) +
                                     ")",
                                 sym, d.perms[k]));
}

// 4F3(-n, a/2, (a+1)/2, b; a, 1+a-c, c; 4), the shared left side of
// Props 3.2 and 3.3, over parameters (a, b, c).
Side f43_lhs() {
    Vars v{3};
    auto a = v.p(0), b = v.p(1), c = v.p(2);
    return series_side({-v.n(), kHalf * a, kHalf * (a + kOne), b}, {a, kOne + a - c, c},
                       Rational(4));
}

IdentityEntry make_P32() {
    Vars v{3};
    auto a = v.p(0), b = v.p(1), c = v.p(2);
    Side rhs = series_side(
        {-v.n(), kOne - c - v.n(), b, kOne + b - c},
        {kOne + a - c, kHalf * (kOne + b - c - v.n()), kHalf * (kTwo + b - c - v.n())},
        Rational(1, 4));
    rhs.pre.num_poch = {{c - b}};
    rhs.pre.den_poch = {{c}};
    return two_sided("P3.2", "Prop. 3.2, Eq. (1e3P2)", {"a", "b", "c"}, f43_lhs(), rhs);
}

IdentityEntry make_P33() {
    Vars v{3};
    auto a = v.p(0), b = v.p(1), c = v.p(2);
    Side rhs = series_side(
        {-v.n(), kHalf * (c - b - v.n()), kHalf * (c - b - v.n() + kOne), c - a - v.n()},
        {c - b - v.n(), kOne - b - v.n(), c}, Rational(4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{b}};
    rhs.pre.den_poch = {{kOne + a - c}};
    return two_sided("P3.3", "Prop. 3.3, Eq. (1e3P3)", {"a", "b", "c"}, f43_lhs(), rhs);
}

IdentityEntry make_3F2A() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({-v.n(), kHalf * a, kHalf * (a + kOne)}, {kOne + a - c, c},
                           Rational(4));
    Side rhs = series_side(
        {-v.n(), kHalf * (c - a - v.n()), kHalf * (c - a - v.n() + kOne)},
        {kOne - a - v.n(), c}, Rational(4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{a}};
    rhs.pre.den_poch = {{kOne + a - c}};
    return two_sided("3F2-A", "Eq. (1e4c1)", {"a", "c"}, lhs, rhs);
}

// 3F2(-n, a/2, (a+1)/2; a, c; 4), the shared left side of Eqs. (1e4c2)
// and (2e4c2).
Side f32_ac_lhs() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    return series_side({-v.n(), kHalf * a, kHalf * (a + kOne)}, {a, c}, Rational(4));
}

IdentityEntry make_3F2B() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side rhs = series_side(
        {-v.n(), kHalf * (kTwo * c - a - v.n() - kOne), kHalf * (kTwo * c - a - v.n())},
        {kTwo * c - a - v.n() - kOne, c}, Rational(4));
    rhs.pre.alternating = true;
    return two_sided("3F2-B", "Eq. (1e4c2)", {"a", "c"}, f32_ac_lhs(), rhs);
}

IdentityEntry make_3F2C() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side rhs = series_side({v.n(Rational(-1, 2)), kHalf - v.n(kHalf), kOne - c - v.n()},
                           {c - a - v.n(), kOne + a - c}, Rational(4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{kOne + a - c}};
    rhs.pre.den_poch = {{c}};
    return two_sided("3F2-C", "Eq. (2e4c2)", {"a", "c"}, f32_ac_lhs(), rhs);
}

IdentityEntry make_1e4R2() {
    Vars v{1};
    auto c = v.p(0);
    Side lhs = series_side({-v.n(), v.c(kHalf)}, {c}, Rational(4));
    Side rhs = series_side({v.n(Rational(-1, 2)), kHalf - v.n(kHalf), kOne - c - v.n()},
                           {c - v.n() - kOne, kTwo - c}, Rational(4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{kTwo - c}};
    rhs.pre.den_poch = {{c}};
    return two_sided("1e4R2", "Rem. 4.2, Eq. (1e4R2)", {"c"}, lhs, rhs);
}

// Shared right side of Eqs. (1e4P3) and (2e4P4) over (a, b):
// 4F3(-n, (1+a-b)/2, (2+a-b)/2, 1; 1+a-b, 1-b-n, 1+a+n; 4).
Side ps_rhs_series() {
    Vars v{2};
    auto a = v.p(0), b = v.p(1);
    return series_side(
        {-v.n(), kHalf * (kOne + a - b), kHalf * (kTwo + a - b), v.c(kOne)},
        {kOne + a - b, kOne - b - v.n(), kOne + a + v.n()}, Rational(4));
}

IdentityEntry make_PSA() {
    Vars v{2};
    auto a = v.p(0), b = v.p(1);
    Side lhs = series_side({kHalf * a, kHalf * (a + kOne), b}, {a, kOne + a + v.n()},
                           Rational(4), SumMode::partial_sum);
    Side rhs = ps_rhs_series();
    rhs.pre.num_poch = {{b}};
    rhs.pre.den_fact = {{1, 0}};
    return two_sided("PS-A", "Eq. (1e4P3)", {"a", "b"}, lhs, rhs);
}

IdentityEntry make_PSB() {
    Vars v{2};
    auto a = v.p(0), b = v.p(1);
    Side lhs = series_side(
        {-(kHalf * b) - v.n(), kHalf * (kOne - b) - v.n(), -a - v.n(kTwo)},
        {-b - v.n(kTwo), kOne - b - v.n()}, Rational(4), SumMode::partial_sum);
    Side rhs = ps_rhs_series();
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{kOne + a, 2, 0}};
    rhs.pre.den_poch = {{kOne + a}};
    rhs.pre.den_fact = {{1, 0}};
    return two_sided("PS-B", "Eq. (2e4P4)", {"a", "b"}, lhs, rhs);
}

IdentityEntry make_P51() {
    Vars v{3};
    auto a = v.p(0), b = v.p(1), c = v.p(2);
    Side lhs = series_side({-v.n(), a, a - c - v.n(), c},
                           {kHalf * (a - v.n()), kHalf * (kOne + a - v.n()), b},
                           Rational(1, 4));
    Side rhs = series_side(
        {-v.n(), kOne + c - b, kOne - b - v.n(), c},
        {kHalf * (kOne + c - b - v.n()), kHalf * (kTwo + c - b - v.n()), kOne + c - a},
        Rational(1, 4));
    rhs.pre.num_poch = {{kOne + c - a}, {b - c}};
    rhs.pre.den_poch = {{kOne - a}, {b}};
    return two_sided("P5.1", "Prop. 5.1, Eq. (1e5P1)", {"a", "b", "c"}, lhs, rhs);
}

IdentityEntry make_3F2D() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({-v.n(), a - c - v.n(), c},
                           {kHalf * (a - v.n()), kHalf * (kOne + a - v.n())}, Rational(1, 4));
    Side rhs = series_side(
        {-v.n(), kOne - a - v.n(), c},
        {kHalf * (kOne + c - a - v.n()), kHalf * (kTwo + c - a - v.n())}, Rational(1, 4));
    rhs.pre.num_poch = {{kOne + c - a}, {a - c}};
    rhs.pre.den_poch = {{kOne - a}, {a}};
    return two_sided("3F2-D", "Eq. (1e5S1)", {"a", "c"}, lhs, rhs);
}

IdentityEntry make_3F2E() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({-v.n(), a, c}, {kHalf * (a - v.n()), kHalf * (kOne + a - v.n())},
                           Rational(1, 4));
    Side rhs = series_side(
        {-v.n(), kOne + kTwo * c - a + v.n(), c},
        {kHalf * (kOne + kTwo * c - a), kHalf * (kTwo + kTwo * c - a)}, Rational(1, 4));
    rhs.pre.num_poch = {{kOne + kTwo * c - a}};
    rhs.pre.den_poch = {{kOne - a}};
    return two_sided("3F2-E", "Eq. (1e5S2)", {"a", "c"}, lhs, rhs);
}

IdentityEntry make_P52_even() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({v.n(Rational(-2)), a, c},
                           {kHalf * a - v.n(), kHalf * (a + kOne) - v.n()}, Rational(1, 4));
    Side rhs = series_side({-v.n(), kOne + c - a + v.n(), a - c - v.n()},
                           {v.c(kHalf), kOne - c - v.n()}, Rational(1, 4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{c}};
    rhs.pre.num_fact = {{2, 0}};
    rhs.pre.den_poch = {{kOne - a, 2, 0}};
    rhs.pre.den_fact = {{1, 0}};
    return two_sided("P5.2-even", "Prop. 5.2, Eq. (1e5P2)", {"a", "c"}, lhs, rhs);
}

IdentityEntry make_P52_odd() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({v.n(Rational(-2)) - kOne, a, c},
                           {kHalf * (a - kOne) - v.n(), kHalf * a - v.n()}, Rational(1, 4));
    Side rhs = series_side({-v.n(), kTwo + c - a + v.n(), a - c - v.n()},
                           {v.c(Rational(3, 2)), kOne - c - v.n()}, Rational(1, 4));
    rhs.pre.alternating = true;
    rhs.pre.num_poch = {{c}, {kOne + c - a + v.n(), 0, 1}};
    rhs.pre.num_fact = {{2, 1}};
    rhs.pre.den_poch = {{kOne - a, 2, 1}};
    rhs.pre.den_fact = {{1, 0}};
    return two_sided("P5.2-odd", "Prop. 5.2, Eq. (2e5P2)", {"a", "c"}, lhs, rhs);
}

IdentityEntry make_PSC() {
    Vars v{2};
    auto a = v.p(0), c = v.p(1);
    Side lhs = series_side({a, a - c - v.n(), c},
                           {kHalf * (a - v.n()), kHalf * (kOne + a - v.n())}, Rational(1, 4),
                           SumMode::partial_sum);
    Side rhs = series_side(
        {-v.n(), kOne + c + v.n(), c, v.c(kOne)},
        {kHalf * (kOne + c), kHalf * (kTwo + c), kOne + c - a}, Rational(1, 4));
    rhs.pre.num_poch = {{kOne + c - a}, {kOne + c}};
    rhs.pre.den_poch = {{kOne - a}};
    rhs.pre.den_fact = {{1, 0}};
    return two_sided("PS-C", "Eq. (1e5S3)", {"a", "c"}, lhs, rhs);
}

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> cat;

    cat.push_back(prop31_entry(0, 0));
    cat.push_back(prop31_entry(1, 0));
    cat.push_back(prop31_entry(1, 1));
    cat.push_back(prop31_entry(2, 1));
    cat.push_back(make_P32());
    cat.push_back(make_P33());
    add_family_relations(cat, Family::T, "Thm. 3.1, ");
    add_sym_relations(cat, NamedId::U, "Thm. 3.2, ");
    cat.push_back(make_3F2A());
    add_family_relations(cat, Family::Ttilde, "");
    add_sym_relations(cat, NamedId::Utilde, "");
    cat.push_back(make_3F2B());
    cat.push_back(invariance("Q-inv", "Eq. (Qinv)", NamedId::Q,
                             family_data(Family::Q).relations[1]));
    cat.push_back(invariance("W-swap", "Eq. (Winv)", NamedId::W,
                             AffineMap::permutation({1, 0})));
    cat.push_back(make_3F2C());
    cat.push_back(make_1e4R2());
    cat.push_back(make_PSA());
    cat.push_back(make_PSB());
    cat.push_back(make_P51());
    add_family_relations(cat, Family::R, "");
    add_sym_relations(cat, NamedId::V, "");
    cat.push_back(make_3F2D());
    add_family_relations(cat, Family::Rtilde, "");
    add_sym_relations(cat, NamedId::Vtilde, "");
    cat.push_back(make_3F2E());
    cat.push_back(invariance("M-inv", "Eq. (Minv)", NamedId::M,
                             family_data(Family::M).relations[1]));
    cat.push_back(invariance("L-swap", "Eq. (Linv)", NamedId::L,
                             AffineMap::permutation({1, 0})));
    cat.push_back(make_P52_even());
    cat.push_back(make_P52_odd());
    cat.push_back(make_PSC());
    return cat;
}

std::string poch_length_str(long len_n, long len_c) {
    std::string s;
    if (len_n == 1)
        s = "n";
    else if (len_n != 0)
        s = std::to_string(len_n) + "n";
    if (len_c != 0 || len_n == 0) {
        if (!s.empty()) s += "+";
        s += std::to_string(len_c);
    }
    return s;
}

} // namespace

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> cat = build_catalog();
    return cat;
}

const IdentityEntry& find_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownIdError(std::string(id));
}

Verdict expand_prop31(int p, int q, const Rational& a, const Rational& c,
                      const std::vector<Rational>& extra_num,
                      const std::vector<Rational>& extra_den, const Rational& x, long n) {
    return expand_prop31<Rational>(p, q, a, c, extra_num, extra_den, x, n);
}

Verdict check_identity(std::string_view id, long n, const std::vector<Rational>& params) {
    return check_identity<Rational>(find_entry(id), n, params);
}

std::string side_guard_description(const Side& side, std::span<const std::string> names) {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    for (const auto* list : {&side.pre.num_poch, &side.pre.den_poch})
        for (const auto& f : *list)
            add("(" + f.base.str(names) + ")_" + poch_length_str(f.len_n, f.len_c) + " != 0");
    for (const auto& d : side.series.denominators)
        add("(" + d.str(names) + ")_k != 0 in range");
    return out;
}

std::vector<CatalogRow> list_catalog() {
    std::vector<CatalogRow> rows;
    for (const auto& e : catalog()) {
        CatalogRow r;
        r.id = e.id;
        r.anchor = e.anchor;
        r.arity = e.arity();
        std::string g;
        for (const auto& f : e.extra_guards) {
            if (!g.empty()) g += ", ";
            g += "(" + f.base.str(e.param_names) + ")_" +
                 poch_length_str(f.len_n, f.len_c) + " != 0";
        }
        if (const auto* two = std::get_if<TwoSides>(&e.body)) {
            std::string lhs = side_guard_description(two->lhs, e.param_names);
            std::string rhs = side_guard_description(two->rhs, e.param_names);
            if (!lhs.empty()) g += (g.empty() ? "" : "; ") + ("lhs: " + lhs);
            if (!rhs.empty()) g += (g.empty() ? "" : "; ") + ("rhs: " + rhs);
        } else {
            g += (g.empty() ? "" : "; ");
            g += "lhs series denominators nonzero through its termination index";
        }
        r.guards = g;
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace hypcheck
