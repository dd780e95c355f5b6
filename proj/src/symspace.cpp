#include "topodyn/symspace.hpp"

#include <algorithm>
#include <sstream>

namespace topodyn {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rat frac_part(const Rat& r) {
    long long fl = floor_div(r.numerator(), r.denominator());
    return r - Rat(fl);
}

bool contains_point(const std::vector<SymPoint>& pts, const SymPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

RotPoint::RotPoint(Rat q_, long long m_) : q(frac_part(q_)), m(m_) {}

std::string to_string(const SymPoint& p) {
    std::ostringstream os;
    if (const auto* r = std::get_if<RotPoint>(&p)) {
        os << "[" << r->q.numerator() << "/" << r->q.denominator();
        if (r->m != 0) os << (r->m > 0 ? "+" : "") << r->m << "a";
        os << "]";
    } else if (const auto* l = std::get_if<LevelPoint>(&p)) {
        os << "(" << l->k << "/" << l->n << ")";
    } else {
        os << "inf";
    }
    return os.str();
}

SymSet SymSet::whole() {
    SymSet s;
    s.kind = Kind::Whole;
    return s;
}
SymSet SymSet::finite(std::vector<SymPoint> pts) {
    SymSet s;
    s.kind = Kind::Finite;
    s.pts = std::move(pts);
    return s;
}
SymSet SymSet::cofinite(std::vector<SymPoint> excluded, bool minus_f) {
    SymSet s;
    s.kind = Kind::CofiniteComplement;
    s.pts = std::move(excluded);
    s.minus_f = minus_f;
    return s;
}
SymSet SymSet::f_plus(std::vector<SymPoint> pts) {
    SymSet s;
    s.kind = Kind::FPlusFinite;
    s.pts = std::move(pts);
    return s;
}
SymSet SymSet::orbit(SymPoint base) {
    SymSet s;
    s.kind = Kind::Orbit;
    s.base = std::move(base);
    return s;
}
SymSet SymSet::level_set(int n) {
    SymSet s;
    s.kind = Kind::Level;
    s.level = n;
    return s;
}
SymSet SymSet::contains_infinity(std::vector<SymPoint> extra) {
    SymSet s;
    s.kind = Kind::ContainsInfinity;
    s.pts = std::move(extra);
    return s;
}

SymPoint SymSystem::act(long long steps, const SymPoint& p) const {
    if (trivial_action) return p;
    if (const auto* r = std::get_if<RotPoint>(&p)) return RotPoint(r->q, r->m + steps);
    if (const auto* l = std::get_if<LevelPoint>(&p)) {
        long long k = (l->k + steps) % l->n;
        if (k < 0) k += l->n;
        return LevelPoint{l->n, static_cast<int>(k)};
    }
    return p;  // infinity is fixed
}

namespace {

bool same_orbit(const SymSystem& sys, const SymPoint& a, const SymPoint& b) {
    if (sys.trivial_action) return a == b;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        const auto* ra = std::get_if<RotPoint>(&a);
        const auto* rb = std::get_if<RotPoint>(&b);
        return ra && rb && ra->q == rb->q;
    }
    const auto* la = std::get_if<LevelPoint>(&a);
    const auto* lb = std::get_if<LevelPoint>(&b);
    if (la && lb) return la->n == lb->n;
    return std::holds_alternative<InfinityPoint>(a) && std::holds_alternative<InfinityPoint>(b);
}

bool point_in_f(const SymSystem& sys, const SymPoint& p) {
    if (!sys.with_f) return false;
    const auto* r = std::get_if<RotPoint>(&p);
    return r && r->in_f();
}

void require_kind(const SymSystem& sys, const SymSet& s) {
    using K = SymSet::Kind;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        if (s.kind == K::Level || s.kind == K::ContainsInfinity)
            throw UnsupportedSetShape("level/infinity set shapes have no meaning here");
        if (s.kind == K::FPlusFinite && !sys.with_f)
            throw UnsupportedSetShape("this space carries no distinguished set F");
        if (s.minus_f && !sys.with_f)
            throw UnsupportedSetShape("this space carries no distinguished set F");
    } else {
        if (s.kind == K::FPlusFinite || s.minus_f)
            throw UnsupportedSetShape("F-based set shapes have no meaning here");
    }
}

}  // namespace

bool sym_member(const SymSystem& sys, const SymSet& s, const SymPoint& p) {
    require_kind(sys, s);
    using K = SymSet::Kind;
    switch (s.kind) {
        case K::Empty:
            return false;
        case K::Whole:
            return true;
        case K::Finite:
            return contains_point(s.pts, p);
        case K::CofiniteComplement:
            if (s.minus_f && point_in_f(sys, p)) return false;
            return !contains_point(s.pts, p);
        case K::FPlusFinite:
            return point_in_f(sys, p) || contains_point(s.pts, p);
        case K::Orbit:
            return same_orbit(sys, *s.base, p);
        case K::Level: {
            const auto* l = std::get_if<LevelPoint>(&p);
            return l && l->n == s.level;
        }
        case K::ContainsInfinity:
            return std::holds_alternative<InfinityPoint>(p) || contains_point(s.pts, p);
    }
    return false;
}

bool sym_is_open(const SymSystem& sys, const SymSet& s) {
    require_kind(sys, s);
    using K = SymSet::Kind;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        switch (s.kind) {
            case K::Empty:
            case K::Whole:
            case K::CofiniteComplement:
                return true;
            case K::Finite:
                return s.pts.empty();
            default:
                return false;  // F-plus-finite and orbits are never open
        }
    }
    switch (s.kind) {
        case K::Empty:
        case K::Whole:
        case K::Level:
            return true;
        case K::Finite:
            for (const auto& p : s.pts)
                if (std::holds_alternative<InfinityPoint>(p)) return false;
            return true;
        case K::CofiniteComplement:
            return true;  // cofinite, with or without infinity
        case K::Orbit:
            return !std::holds_alternative<InfinityPoint>(*s.base);
        case K::ContainsInfinity:
            return false;  // its complement is infinite
        default:
            return false;
    }
}

bool sym_is_closed(const SymSystem& sys, const SymSet& s) {
    require_kind(sys, s);
    using K = SymSet::Kind;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        switch (s.kind) {
            case K::Empty:
            case K::Whole:
            case K::Finite:
            case K::FPlusFinite:
                return true;
            case K::Orbit:
                // finite orbits (trivial action) and the orbit F itself
                return sys.trivial_action || point_in_f(sys, *s.base);
            case K::CofiniteComplement:
                return s.pts.empty() && !s.minus_f;  // only the whole space
            default:
                return false;
        }
    }
    switch (s.kind) {
        case K::Empty:
        case K::Whole:
        case K::Level:
        case K::ContainsInfinity:
            return true;
        case K::Finite:
            return true;
        case K::Orbit:
            return true;  // level cycles are finite, the infinity orbit is a singleton
        case K::CofiniteComplement:
            // closed iff it contains infinity
            for (const auto& p : s.pts)
                if (std::holds_alternative<InfinityPoint>(p)) return false;
            return true;
    }
    return false;
}

SymSet sym_closure(const SymSystem& sys, const SymSet& s) {
    require_kind(sys, s);
    using K = SymSet::Kind;
    if (sys.kind == SpaceKind::CofiniteWithF && s.kind == K::Orbit) {
        // canonical shapes, so closures compare extensionally
        if (sys.trivial_action) return SymSet::finite({*s.base});
        if (point_in_f(sys, *s.base)) return SymSet::f_plus({});
        // infinite orbit missing F: no finite or F-plus-finite superset
        return SymSet::whole();
    }
    if (sym_is_closed(sys, s)) return s;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        switch (s.kind) {
            case K::CofiniteComplement:
                return SymSet::whole();
            default:
                throw UnsupportedSetShape("no closure rule for this set shape");
        }
    }
    if (s.kind == K::CofiniteComplement) {
        // cofinite set of level points; adjoining infinity closes it
        std::vector<SymPoint> excl;
        for (const auto& p : s.pts)
            if (!std::holds_alternative<InfinityPoint>(p)) excl.push_back(p);
        return SymSet::cofinite(std::move(excl));
    }
    throw UnsupportedSetShape("no closure rule for this set shape");
}

bool sym_orbit_closure_member(const SymSystem& sys, const SymPoint& x, const SymPoint& y) {
    return sym_member(sys, sym_closure(sys, SymSet::orbit(x)), y);
}

Certificate sym_bar_membership(const SymSystem& sys, const SymPoint& x, const SymPoint& y) {
    if (same_orbit(sys, x, y))
        return {true, "orbit-pair",
                to_string(y) + " lies on the orbit of " + to_string(x) +
                    ", so the pair is in the relation itself"};
    if (sys.kind == SpaceKind::CofiniteWithF) {
        if (sys.trivial_action)
            return {true, "cofinite-overlap",
                    "every basic neighborhood pair (U, V) consists of sets cofinite up to F; "
                    "U and V meet, and a common point a yields the diagonal pair (a, a)"};
        return {true, "escaping-orbit",
                "every basic neighborhood U of " + to_string(x) +
                    " contains a point a outside F; the orbit of a is infinite and disjoint "
                    "from F, so it meets every basic neighborhood V of " + to_string(y) +
                    " in a point b with (a, b) in the relation"};
    }
    const auto* lx = std::get_if<LevelPoint>(&x);
    const auto* ly = std::get_if<LevelPoint>(&y);
    if (lx && ly)
        return {false, "isolated-pair",
                "the singletons of " + to_string(x) + " and " + to_string(y) +
                    " are open and the levels differ, so no relation pair meets them"};
    // one side is infinity, the other a level point
    const LevelPoint lev = lx ? *lx : *ly;
    return {false, "level-avoiding-neighborhood",
            "the open set omitting level " + std::to_string(lev.n) +
                " is a neighborhood of infinity; relation pairs touching " + to_string(lx ? x : y) +
                " stay on that level, so the pair is separated from the relation"};
}

Certificate sym_r_bar_membership(const SymSystem& sys, const SymPoint& x, const SymPoint& y) {
    if (sym_orbit_closure_member(sys, x, y))
        return {true, "orbit-closure-pair",
                to_string(y) + " lies in the orbit closure of " + to_string(x)};
    if (sys.kind == SpaceKind::CofiniteWithF) {
        if (sys.trivial_action)
            return {true, "cofinite-overlap",
                    "any two nonempty basic opens meet; a common point gives a diagonal pair of "
                    "the orbit-closure relation inside the neighborhood pair"};
        return {true, "escaping-orbit",
                "every basic neighborhood U of " + to_string(x) +
                    " contains a point a outside F whose orbit closure is the whole space, "
                    "so (a, b) lies in the relation for any b in any neighborhood of " +
                    to_string(y)};
    }
    return sym_bar_membership(sys, x, y);  // here the orbit-closure relation equals the orbit relation
}

namespace {

void add_cert(SymReport& rep, const std::string& name, bool value, Certificate cert) {
    rep.report.add(name, value);
    cert.kind = name + ":" + cert.kind;
    rep.certificates.push_back(std::move(cert));
}

}  // namespace

nlohmann::ordered_json SymReport::to_json() const {
    nlohmann::ordered_json j = report.to_json();
    j["certificates"] = nlohmann::ordered_json::array();
    for (const auto& c : certificates) {
        nlohmann::ordered_json cj;
        cj["value"] = c.value;
        cj["kind"] = c.kind;
        cj["text"] = c.text;
        j["certificates"].push_back(cj);
    }
    return j;
}

SymReport sym_analyze(const SymSystem& sys) {
    SymReport rep;
    if (sys.kind == SpaceKind::CofiniteWithF) {
        const SymPoint zero = RotPoint(Rat(0), 0);
        const SymPoint half = RotPoint(Rat(1, 2), 0);
        const SymPoint third = RotPoint(Rat(1, 3), 0);
        add_cert(rep, "t1", true,
                 {true, "cofinite-base",
                  "the topology contains the cofinite topology, so every singleton is closed"});
        add_cert(rep, "compact", true,
                 {true, "cofinite-neighborhoods",
                  sys.with_f
                      ? "every neighborhood of a point of F is cofinite; one cover member leaves "
                        "only finitely many points uncovered"
                      : "every nonempty open set is cofinite; one cover member leaves only "
                        "finitely many points uncovered"});
        add_cert(rep, "hausdorff", false,
                 {false, "hyperconnected",
                  "any two nonempty opens are cofinite up to F and therefore intersect"});
        SyndeticCert syn = sym_syndetic(sys, sys.with_f ? half : third, SymSet::whole());
        add_cert(rep, "flow_pap", true,
                 {true, "cofinite-return-times",
                  "every neighborhood of a point contains all but finitely many points of its "
                  "orbit, so each return-time set is cofinite in Z and syndetic (sample gap " +
                      std::to_string(syn.gap) + ")"});
        if (sys.trivial_action) {
            add_cert(rep, "decomposition_pap", true,
                     {true, "closed-singletons",
                      "orbit closures are the singletons themselves and form an equivalence"});
            Certificate pos = sym_r_bar_membership(sys, third, half);
            add_cert(rep, "r_closed", false,
                     {false, "closure-gap",
                      "the pair (" + to_string(third) + ", " + to_string(half) +
                          ") is outside the orbit-closure relation, yet " + pos.text});
            add_cert(rep, "minimal", false,
                     {false, "proper-closure",
                      "the orbit closure of " + to_string(third) + " is a proper singleton"});
            add_cert(rep, "pointwise_periodic", true,
                     {true, "fixed-points", "the trivial action fixes every point"});
            add_cert(rep, "periodic", true, {true, "identity", "the acting group is trivial"});
            add_cert(rep, "quotient_hausdorff", false,
                     {false, "cofinite-quotient",
                      "the orbit-class space is the space itself with its cofinite-style "
                      "topology, which is not Hausdorff"});
            return rep;
        }
        add_cert(rep, "decomposition_pap", false,
                 {false, "symmetry-failure",
                  "cl(orbit(" + to_string(half) + ")) is the whole space and contains " +
                      to_string(zero) + ", but cl(orbit(" + to_string(zero) + ")) = F omits " +
                      to_string(half)});
        Certificate pos = sym_r_bar_membership(sys, zero, half);
        add_cert(rep, "r_closed", false,
                 {false, "closure-gap",
                  "(" + to_string(zero) + ", " + to_string(half) +
                      ") is outside the orbit-closure relation since " + to_string(half) +
                      " is not in F = cl(orbit(" + to_string(zero) + ")); yet " + pos.text});
        add_cert(rep, "minimal", false,
                 {false, "proper-closure",
                  "cl(orbit(" + to_string(zero) + ")) = F is closed and proper"});
        add_cert(rep, "pointwise_periodic", false,
                 {false, "infinite-orbit",
                  "the symbolic rotation is injective on every orbit, so orbits are infinite"});
        add_cert(rep, "periodic", false,
                 {false, "infinite-orbit", "no power of the rotation fixes a non-F point"});
        add_cert(rep, "quotient_hausdorff", false,
                 {false, "sierpinski-quotient",
                  "the orbit classes are F and its complement; the complement of F is open but "
                  "F is not, so the two classes cannot be separated"});
        return rep;
    }

    // DiscretePlusInfinity (the circle-tower model)
    const SymPoint p2 = LevelPoint{2, 0};
    add_cert(rep, "t1", true,
             {true, "metrizable-model", "level points are isolated and finite sets are closed"});
    add_cert(rep, "compact", true,
             {true, "one-point-compactification",
              "every neighborhood of infinity is cofinite, so any cover has a finite subcover"});
    add_cert(rep, "hausdorff", true,
             {true, "isolated-plus-cofinite",
              "two level points are separated by their singletons; a level point and infinity "
              "are separated by the singleton and its cofinite complement"});
    add_cert(rep, "flow_pap", true,
             {true, "periodic-orbits",
              "the level-n cycle returns after n steps, so every return-time set contains a "
              "full residue class; infinity is fixed"});
    add_cert(rep, "decomposition_pap", true,
             {true, "closed-orbits",
              "orbit closures are the orbits themselves (finite cycles and the fixed point) "
              "and already form an equivalence"});
    Certificate neg = sym_bar_membership(sys, InfinityPoint{}, p2);
    add_cert(rep, "r_closed", true,
             {true, "case-analysis",
              "pairs on a common level stay in the relation; pairs on distinct levels and "
              "pairs touching infinity are separated by basic opens, e.g. " + neg.text});
    add_cert(rep, "minimal", false,
             {false, "proper-closure", "the level-2 cycle is closed and proper"});
    add_cert(rep, "pointwise_periodic", true,
             {true, "cycles", "the level-n orbit has period n and infinity is fixed"});
    add_cert(rep, "periodic", false,
             {false, "unbounded-orders",
              "any global period would be divisible by every n >= 2"});
    add_cert(rep, "quotient_hausdorff", true,
             {true, "compactified-discrete",
              "the orbit space is again a countable discrete set plus one cofinite point, "
              "which is Hausdorff"});
    return rep;
}

SyndeticCert sym_syndetic(const SymSystem& sys, const SymPoint& x, const SymSet& u) {
    if (!sym_is_open(sys, u)) throw NotOpen("the given set is not open");
    if (!sym_member(sys, u, x)) throw PointNotInU("the point is not in the given open set");
    if (sys.trivial_action)
        return {true, 1, "the acting group is trivial; every return-time set is the whole group"};
    if (sys.kind == SpaceKind::CofiniteWithF) {
        const auto& rx = std::get<RotPoint>(x);
        // orbit points excluded from U solve y = x + n*alpha exactly
        std::vector<long long> excluded;
        if (u.kind == SymSet::Kind::CofiniteComplement) {
            for (const auto& p : u.pts)
                if (const auto* rp = std::get_if<RotPoint>(&p))
                    if (rp->q == rx.q) excluded.push_back(rp->m - rx.m);
        }
        if (excluded.empty())
            return {true, 1, "no orbit point is excluded; the return-time set is all of Z"};
        std::sort(excluded.begin(), excluded.end());
        long long gap = 1;
        for (std::size_t i = 0, r = 1; i < excluded.size(); ++i, ++r) {
            if (i > 0 && excluded[i] != excluded[i - 1] + 1) r = 1;
            gap = std::max(gap, static_cast<long long>(r) + 1);
        }
        long long max_abs = std::max(std::llabs(excluded.front()), std::llabs(excluded.back()));
        std::ostringstream os;
        os << "return-time set is Z minus " << excluded.size()
           << " solved indices; gap " << gap << " <= bound " << (2 * max_abs + 1);
        return {true, gap, os.str()};
    }
    if (const auto* l = std::get_if<LevelPoint>(&x)) {
        // the orbit is periodic with period n; scan one period
        long long gap = 1, run = 0, best_run = 0;
        for (int t = 0; t < 2 * l->n; ++t) {
            SymPoint p = sys.act(t, x);
            if (sym_member(sys, u, p))
                run = 0;
            else
                best_run = std::max(best_run, ++run);
        }
        gap = best_run + 1;
        return {true, gap, "the orbit has period " + std::to_string(l->n) + "; gap " +
                               std::to_string(gap) + " <= " + std::to_string(l->n)};
    }
    return {true, 1, "infinity is fixed; the return-time set is all of Z"};
}

TruncatedTower truncate_tower(int max_level) {
    if (max_level < 2) throw std::invalid_argument("max_level must be at least 2");
    // The trace topology on {levels 2..N, infinity} is discrete: every
    // neighborhood of infinity may exclude any finite set, hence the whole
    // truncation window.
    int n = 1;
    std::vector<int> offset(max_level + 1, 0);
    for (int lev = 2; lev <= max_level; ++lev) {
        offset[lev] = n - 1;
        n += lev;
    }
    const int inf = n - 1;
    TruncatedTower t;
    t.infinity_index = inf;
    t.action.space = discrete_space(n);
    std::vector<int> gen(n);
    gen[inf] = inf;
    for (int lev = 2; lev <= max_level; ++lev)
        for (int k = 0; k < lev; ++k) gen[offset[lev] + k] = offset[lev] + (k + 1) % lev;
    t.action.generators.push_back(std::move(gen));
    t.action.kind = GroupKind::Z;
    std::vector<std::vector<int>> classes;
    for (int lev = 2; lev <= max_level; ++lev) {
        std::vector<int> cls;
        for (int k = 0; k < lev; ++k) cls.push_back(offset[lev] + k);
        classes.push_back(std::move(cls));
    }
    classes.push_back({inf});
    t.orbits = Relation::from_partition(n, classes);
    return t;
}

}  // namespace topodyn
