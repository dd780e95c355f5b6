#include "topodyn/checkers.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace topodyn {

void Report::add(const std::string& name, const Verdict& v) {
    verdicts.push_back({name, v.value});
    if (v.witness) witnesses.push_back(*v.witness);
    if (v.note) notes.push_back(*v.note);
}

void Report::add(const std::string& name, bool value) {
    verdicts.push_back({name, value});
}

bool Report::get(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v.value;
    throw std::out_of_range("no verdict named " + name);
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["verdicts"] = nlohmann::ordered_json::object();
    for (const auto& v : verdicts) j["verdicts"][v.name] = v.value;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
        nlohmann::ordered_json wj;
        wj["kind"] = w.kind;
        wj["points"] = w.points;
        wj["explanation"] = w.explanation;
        j["witnesses"].push_back(wj);
    }
    j["notes"] = notes;
    return j;
}

namespace {

std::string idx_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::optional<Witness> equivalence_witness(const Relation& h, const char* rel_name) {
    const int n = h.n();
    for (int x = 0; x < n; ++x)
        if (!h.at(x, x))
            return Witness{"reflexivity-failure", {x},
                           std::string(rel_name) + "(" + std::to_string(x) +
                               ") does not contain the point itself"};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (h.at(x, y) && !h.at(y, x))
                return Witness{"symmetry-failure", {y, x},
                               std::to_string(y) + " is in " + rel_name + "(" +
                                   std::to_string(x) + ") but " + std::to_string(x) +
                                   " is not in " + rel_name + "(" + std::to_string(y) + ")"};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (h.at(x, y))
                for (int z = 0; z < n; ++z)
                    if (h.at(y, z) && !h.at(x, z))
                        return Witness{"transitivity-failure", {x, y, z},
                                       "chain " + std::to_string(x) + "->" + std::to_string(y) +
                                           "->" + std::to_string(z) + " is not closed under " +
                                           rel_name};
    return std::nullopt;
}

}  // namespace

Verdict is_pointwise_almost_periodic(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    RelationProfile hp = relation_profile(h);
    if (relation_profile(e).equivalence) {
        // symmetry alone must suffice when E is an equivalence
        bool shortcut = hp.reflexive && hp.symmetric;
        if (shortcut != hp.equivalence)
            throw CrossAssertionError("symmetry shortcut disagrees with full equivalence check");
    }
    Verdict v;
    v.value = hp.equivalence;
    if (!v.value) v.witness = equivalence_witness(h, "cl-row");
    return v;
}

Verdict is_r_closed(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    Relation bar_h = product_closure(x, h);
    Relation bar_e = product_closure(x, e);
    bool closed1 = (bar_h == h);
    bool closed2 = (bar_e == h);
    if (closed1 != closed2)
        throw CrossAssertionError("the two closedness formulations disagree");
    Verdict v;
    v.value = closed1;
    if (!v.value) {
        for (int a = 0; a < h.n() && !v.witness; ++a)
            for (int b = 0; b < h.n(); ++b)
                if (bar_h.at(a, b) && !h.at(a, b)) {
                    v.witness = Witness{"closure-gap", {a, b},
                                        "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") is in the product closure but not in the row-closure relation"};
                    break;
                }
    }
    return v;
}

bool is_d_stable(const FinSpace& x, const Relation& e) {
    bool stable = (prolongation(x, e) == hat(x, e));
    if (stable != is_r_closed(x, e).value)
        throw CrossAssertionError("d_stable disagrees with r_closed");
    return stable;
}

Verdict is_l_stable(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    const int n = x.n();
    for (int p = 0; p < n; ++p) {
        // minimal open superset of cl(E(p))
        PointSet u_star(n);
        for (auto y = h.row[p].find_first(); y != PointSet::npos; y = h.row[p].find_next(y))
            u_star |= x.min_open(static_cast<int>(y));
        // largest E-saturated open subset of U*
        PointSet w = u_star;
        for (;;) {
            PointSet keep(n);
            for (auto z = w.find_first(); z != PointSet::npos; z = w.find_next(z))
                if (e.row[z].is_subset_of(w)) keep.set(z);
            PointSet next = x.interior(keep);
            if (next == w) break;
            w = std::move(next);
        }
        if (!h.row[p].is_subset_of(w)) {
            Verdict v;
            v.value = false;
            v.witness = Witness{"l-stability-failure", {p},
                                "no E-saturated open set squeezes between cl(E(" +
                                    std::to_string(p) + ")) and its minimal open superset {" +
                                    idx_list(members(u_star)) + "}"};
            return v;
        }
    }
    return Verdict{true, std::nullopt, std::nullopt};
}

Verdict is_weakly_almost_periodic(const FinSpace& x, const Relation& e) {
    Verdict v;
    v.value = true;
    v.note = "weak almost periodicity is trivially true on finite spaces "
             "(finite unions of closed sets are closed)";
    if (x.n() <= 6) {
        Relation h = hat(x, e);
        for (const auto& a : all_closed_sets(x))
            if (!x.is_closed(saturate(h, a)))
                throw CrossAssertionError("closed saturation failed on a finite space");
    }
    return v;
}

Verdict is_minimal(const FinSpace& x, const Relation& e) {
    for (int p = 0; p < x.n(); ++p)
        if (!x.closure(e.row[p]).all()) {
            Verdict v;
            v.value = false;
            v.witness = Witness{"density-failure", {p},
                                "cl(E(" + std::to_string(p) + ")) = {" +
                                    idx_list(members(x.closure(e.row[p]))) +
                                    "} is a proper subset"};
            return v;
        }
    return Verdict{true, std::nullopt, std::nullopt};
}

PointSet almost_periodic_points(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    const bool e_equiv = relation_profile(e).equivalence;
    PointSet out(x.n());
    for (int p = 0; p < x.n(); ++p) {
        const PointSet& hp = h.row[p];
        bool def_ok = true;
        for (auto y = hp.find_first(); y != PointSet::npos; y = hp.find_next(y))
            if (h.row[y] != hp) {
                def_ok = false;
                break;
            }
        // The restriction characterization views cl(E(p)) as a space of its
        // own, which is coherent only when that set is E-saturated; an
        // almost periodic point always satisfies this (cl(E(y)) = cl(E(p))
        // forces E(y) inside it), so the guard never masks a positive.
        if (e_equiv && hp.any() && saturate(e, hp).is_subset_of(hp)) {
            // restriction characterization must agree with the definition
            RestrictResult rr = restrict_to(x, h, hp);
            bool sym = relation_profile(rr.rel).symmetric;
            bool closed_eq = relation_profile(rr.rel).equivalence &&
                             product_closure(rr.space, rr.rel) == rr.rel;
            if (sym != def_ok || closed_eq != def_ok)
                throw CrossAssertionError(
                    "restriction characterization of almost periodicity disagrees at point " +
                    std::to_string(p));
        }
        if (def_ok) out.set(p);
    }
    return out;
}

Quotient quotient(const FinSpace& x, const Relation& q) {
    if (!relation_profile(q).equivalence)
        throw NotAnEquivalence("quotient requires an equivalence relation");
    const int n = x.n();
    Quotient out;
    out.point_class.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        if (out.point_class[p] != -1) continue;
        int c = static_cast<int>(out.class_members.size());
        out.class_members.push_back(members(q.row[p]));
        for (int m : out.class_members.back()) out.point_class[m] = c;
    }
    const int nc = static_cast<int>(out.class_members.size());
    std::vector<PointSet> rows(nc, PointSet(nc));
    std::vector<PointSet> preimages(nc);
    for (int c = 0; c < nc; ++c) {
        // smallest saturated open superset of the class, by alternating the
        // open hull with class saturation
        PointSet w = make_set(n, out.class_members[c]);
        for (;;) {
            PointSet next = w;
            for (auto p = w.find_first(); p != PointSet::npos; p = w.find_next(p))
                next |= x.min_open(static_cast<int>(p));
            for (int d = 0; d < nc; ++d)
                if (next.intersects(make_set(n, out.class_members[d])))
                    next |= make_set(n, out.class_members[d]);
            if (next == w) break;
            w = std::move(next);
        }
        preimages[c] = w;
        for (int d = 0; d < nc; ++d)
            if (w.test(out.class_members[d][0])) rows[c].set(d);
    }
    for (int c = 0; c < nc; ++c)
        if (!x.is_open(preimages[c]))
            throw CrossAssertionError("quotient minimal open has a non-open preimage");
    out.space = FinSpace::from_min_open(std::move(rows));
    return out;
}

Verdict quotient_is_hausdorff(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    Verdict v;
    Quotient q;
    if (relation_profile(h).equivalence) {
        q = quotient(x, h);
    } else {
        q = quotient(x, tilde(x, e));
        v.note = "cl-row relation is not an equivalence; quotient taken by the orbit-class relation";
    }
    v.value = q.space.separation_profile().hausdorff;
    if (!v.value) {
        const int nc = q.space.n();
        for (int a = 0; a < nc && !v.witness; ++a)
            for (int b = a + 1; b < nc; ++b)
                if (q.space.min_open(a).intersects(q.space.min_open(b))) {
                    v.witness = Witness{
                        "hausdorff-failure",
                        {q.class_members[a][0], q.class_members[b][0]},
                        "the classes of " + std::to_string(q.class_members[a][0]) + " and " +
                            std::to_string(q.class_members[b][0]) +
                            " have no disjoint open neighborhoods in the quotient"};
                    break;
                }
    }
    return v;
}

Report analyze(const FinSpace& x, const Relation& e) {
    Report r;
    Verdict pap = is_pointwise_almost_periodic(x, e);
    Verdict rc = is_r_closed(x, e);
    bool ds = is_d_stable(x, e);
    Verdict ls = is_l_stable(x, e);
    Verdict wap = is_weakly_almost_periodic(x, e);
    Verdict mini = is_minimal(x, e);
    Verdict qh = quotient_is_hausdorff(x, e);

    if (rc.value != ds) throw CrossAssertionError("r_closed != d_stable");
    SeparationProfile sep = x.separation_profile();
    if (sep.hausdorff && rc.value != ls.value)
        throw CrossAssertionError("r_closed != l_stable on a Hausdorff space");
    if (relation_profile(e).equivalence && rc.value && !pap.value)
        throw CrossAssertionError("r_closed equivalence is not pointwise almost periodic");

    r.add("pap_decomposition", pap);
    r.add("r_closed", rc);
    r.add("d_stable", ds);
    r.add("l_stable", ls);
    r.add("weakly_almost_periodic", wap);
    r.add("minimal", mini);
    r.add("compact_classes", true);
    r.notes.push_back("compact_classes: trivially compact (finite)");
    r.add("pointwise_periodic_like", true);
    r.notes.push_back("pointwise_periodic_like: all classes are finite on a finite space");
    r.add("orbit_class_hausdorff", qh);
    return r;
}

void check_instance(const FinSpace& x, const Relation& e, std::size_t index,
                    std::vector<Violation>& out) {
    auto fail = [&](const std::string& law, Witness w) {
        out.push_back(Violation{index, law, std::move(w)});
    };
    Relation h = hat(x, e);
    RelationProfile hp = relation_profile(h);

    // (a) symmetry implies transitivity for cl-rows of an equivalence
    if (hp.symmetric && !hp.transitive)
        fail("symmetry-implies-transitivity", *equivalence_witness(h, "cl-row"));

    // (b) closed cl-row relation is an equivalence
    Relation bar_h = product_closure(x, h);
    if (bar_h == h && !hp.equivalence)
        fail("closed-implies-equivalence", *equivalence_witness(h, "cl-row"));

    // (c) transitivity criterion: E(cl(E(x))) inside cl(E(x))
    bool criterion = true;
    int bad = -1;
    for (int p = 0; p < x.n(); ++p)
        if (!saturate(e, h.row[p]).is_subset_of(h.row[p])) {
            criterion = false;
            bad = p;
            break;
        }
    if (criterion != hp.transitive)
        fail("transitivity-criterion",
             Witness{"criterion-mismatch", {bad},
                     "saturation criterion disagrees with the transitivity flag"});

    // (d) r_closed == d_stable
    try {
        is_d_stable(x, e);
    } catch (const CrossAssertionError& err) {
        fail("r-closed-equals-d-stable", Witness{"cross-assertion", {}, err.what()});
    }

    // (e) on Hausdorff spaces r_closed == l_stable
    if (x.separation_profile().hausdorff) {
        if (is_r_closed(x, e).value != is_l_stable(x, e).value)
            fail("r-closed-equals-l-stable-hausdorff", Witness{"cross-assertion", {}, ""});
    }

    // (f) with a dense class, four conditions coincide
    bool has_dense = false;
    for (int p = 0; p < x.n() && !has_dense; ++p)
        if (x.closure(e.row[p]).all()) has_dense = true;
    if (has_dense) {
        bool c1 = hp.symmetric;
        bool c2 = hp.equivalence;
        bool c3 = hp.equivalence && bar_h == h;
        bool c4 = is_minimal(x, e).value;
        if (c1 != c2 || c2 != c3 || c3 != c4)
            fail("dense-element-four-way",
                 Witness{"four-way-mismatch", {},
                         "symmetric=" + std::to_string(c1) + " equivalence=" + std::to_string(c2) +
                             " closed-equivalence=" + std::to_string(c3) +
                             " minimal=" + std::to_string(c4)});
    }

    // (g) per-point almost-periodicity characterization
    try {
        almost_periodic_points(x, e);
    } catch (const CrossAssertionError& err) {
        fail("almost-periodic-point-characterization", Witness{"cross-assertion", {}, err.what()});
    }
}

std::vector<Violation> theorem_battery(const std::vector<Instance>& instances) {
    const std::size_t n = instances.size();
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(n)));
    if (workers == 1) {
        std::vector<Violation> out;
        for (std::size_t i = 0; i < n; ++i)
            check_instance(instances[i].space, instances[i].rel, i, out);
        return out;
    }
    std::vector<std::vector<Violation>> parts(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                check_instance(instances[i].space, instances[i].rel, i, parts[w]);
        });
    }
    for (auto& t : threads) t.join();
    std::vector<Violation> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
    // report order is by instance index, independent of scheduling
    std::stable_sort(out.begin(), out.end(),
                     [](const Violation& a, const Violation& b) { return a.instance < b.instance; });
    return out;
}

}  // namespace topodyn
