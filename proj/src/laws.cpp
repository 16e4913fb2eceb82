#include "fuzzydb/law/laws.hpp"

#include <stdexcept>

#include "fuzzydb/law/formula_oracle.hpp"
#include "fuzzydb/util.hpp"

namespace fuzzydb::law {

namespace {

std::string dump(const FuzzyArray& a) {
    if (a.base().row_keys().empty()) {
        return "  (zero array)\n";
    }
    std::string out;
    for (const RowKey& k : a.base().row_keys()) {
        Row r(a.base().row_or_empty(k));
        out += "  " + r.to_string() + " ~ {" + a.phi(r).to_string() + "}\n";
    }
    return out;
}

std::string dump(const StandardArray& a) {
    if (a.row_keys().empty()) {
        return "  (empty array)\n";
    }
    std::string out;
    for (const RowKey& k : a.row_keys()) {
        out += "  " + k.to_string() + " -> " + Row(a.row_or_empty(k)).to_string() + "\n";
    }
    return out;
}

std::string two_sides(const char* what, const FuzzyArray& lhs, const FuzzyArray& rhs) {
    return std::string(what) + "\nlhs:\n" + dump(lhs) + "rhs:\n" + dump(rhs);
}

FuzzyArray array_of(const std::vector<std::pair<Row, FuzzyMultiset>>& rows) {
    StandardArray base;
    std::map<RowKey, FuzzyMultiset> fuzzy;
    int n = 0;
    for (const auto& [content, m] : rows) {
        RowKey k = RowKey::user("r" + std::to_string(++n));
        base.add_row(k);
        for (const auto& [c, v] : content.cells()) {
            base.set(k, c, v);
        }
        if (!m.empty()) {
            fuzzy.emplace(k, m);
        }
    }
    return FuzzyArray::make_regular(base, fuzzy);
}

Row one_row_content() {
    Row r;
    r.set(ColumnKey{"c1"}, CellValue::text("x"));
    return r;
}

FuzzyArray one_row(const FuzzyMultiset& m) {
    return array_of({{one_row_content(), m}});
}

std::set<ColumnKey> random_col_subset(InstanceGenerator& gen) {
    std::set<ColumnKey> j;
    for (const ColumnKey& c : gen.columns()) {
        if (gen.below(2)) {
            j.insert(c);
        }
    }
    return j;
}

using Checker = std::function<bool(InstanceGenerator&, std::string&)>;

void run_forall(InstanceGenerator& gen, int n, LawReport& rep, const Checker& check) {
    rep.as_expected = true;
    for (int i = 0; i < n; ++i) {
        std::string w;
        if (!check(gen, w)) {
            rep.as_expected = false;
            rep.witness = "instance " + std::to_string(i + 1) + ":\n" + w;
            return;
        }
    }
}

// Inclusion laws: lhs must be included in rhs throughout, and strictly so at
// least once in the run.
void run_inclusion(InstanceGenerator& gen, int n, LawReport& rep,
                   const std::function<std::pair<FuzzyArray, FuzzyArray>(InstanceGenerator&)>&
                       make_sides,
                   const char* what) {
    rep.strict_count = 0;
    rep.as_expected = true;
    for (int i = 0; i < n; ++i) {
        auto [lhs, rhs] = make_sides(gen);
        if (!sub_array(lhs, rhs)) {
            rep.as_expected = false;
            rep.witness =
                "instance " + std::to_string(i + 1) + ": inclusion fails\n" +
                two_sides(what, lhs, rhs);
            return;
        }
        if (!strong_equiv(lhs, rhs)) {
            ++rep.strict_count;
        }
    }
    if (rep.strict_count == 0) {
        rep.as_expected = false;
        rep.witness = std::string(what) +
                      ": no strictly-included instance found; equality must not be asserted";
    }
}

// Counterexample laws: the pinned witness must break the identity. The
// identity is also probed on random instances, informationally.
void run_pinned(InstanceGenerator& gen, int n, LawReport& rep, bool pinned_broken,
                const std::string& pinned_witness,
                const std::function<bool(InstanceGenerator&)>& identity_holds_on) {
    rep.random_violations = 0;
    for (int i = 0; i < n; ++i) {
        if (!identity_holds_on(gen)) {
            ++rep.random_violations;
        }
    }
    rep.as_expected = pinned_broken;
    if (!pinned_broken) {
        rep.witness = pinned_witness;
    }
}

std::vector<LawCase> build_registry() {
    std::vector<LawCase> laws;

    laws.push_back({"pi-empty", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            FuzzyArray p = project(a, {});
                            if (strong_equiv(p, zero_array())) {
                                return true;
                            }
                            w = two_sides("project(A, {}) vs zero", p, zero_array());
                            return false;
                        });
                    }});

    laws.push_back({"pi-compose", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            auto j1 = random_col_subset(g);
                            auto j2 = random_col_subset(g);
                            std::set<ColumnKey> both;
                            for (const ColumnKey& c : j1) {
                                if (j2.contains(c)) {
                                    both.insert(c);
                                }
                            }
                            FuzzyArray lhs = project(project(a, j2), j1);
                            FuzzyArray rhs = project(a, both);
                            if (strong_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = two_sides("pi_J1(pi_J2(A)) vs pi_{J1 n J2}(A)", lhs, rhs);
                            return false;
                        });
                    }});

    laws.push_back({"sigma-one", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            FuzzyArray s = select(a, [](const Row&) -> Fuzzy { return 1.0; });
                            if (strong_equiv(s, a)) {
                                return true;
                            }
                            w = two_sides("select(A, 1) vs A", s, a);
                            return false;
                        });
                    }});

    laws.push_back({"sigma-zero", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            FuzzyArray s = select(a, [](const Row&) -> Fuzzy { return 0.0; });
                            if (strong_equiv(s, zero_array())) {
                                return true;
                            }
                            w = two_sides("select(A, 0) vs zero", s, zero_array());
                            return false;
                        });
                    }});

    laws.push_back({"sigma-compose", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            auto psi1 = g.condition();
                            auto psi2 = g.condition();
                            FuzzyArray lhs = select(select(a, psi2.fn), psi1.fn);
                            FuzzyArray rhs = select(a, [&](const Row& r) {
                                return std::min(psi1.fn(r), psi2.fn(r));
                            });
                            if (strong_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = "psi1 = " + psi1.desc + ", psi2 = " + psi2.desc + "\n" +
                                two_sides("sigma composition", lhs, rhs);
                            return false;
                        });
                    }});

    laws.push_back({"rho-identity", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            std::map<ColumnKey, ColumnKey> id;
                            for (const ColumnKey& c : a.base().col_keys()) {
                                id.emplace(c, c);
                            }
                            FuzzyArray r = rename(a, id);
                            if (strong_equiv(r, a)) {
                                return true;
                            }
                            w = two_sides("rename(A, id) vs A", r, a);
                            return false;
                        });
                    }});

    laws.push_back({"sqcup-assoc", 3, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            StandardArray a = g.standard_array();
                            StandardArray b = g.standard_array();
                            StandardArray c = g.standard_array();
                            StandardArray lhs = standard_union(standard_union(a, b), c);
                            StandardArray rhs = standard_union(a, standard_union(b, c));
                            if (strong_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = "(A u B) u C:\n" + dump(lhs) + "A u (B u C):\n" + dump(rhs);
                            return false;
                        });
                    }});

    laws.push_back({"sqcup-comm", 2, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            StandardArray a = g.standard_array();
                            StandardArray b = g.standard_array();
                            StandardArray lhs = standard_union(a, b);
                            StandardArray rhs = standard_union(b, a);
                            if (strong_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = "A u B:\n" + dump(lhs) + "B u A:\n" + dump(rhs);
                            return false;
                        });
                    }});

    using BinOp = FuzzyArray (*)(const FuzzyArray&, const FuzzyArray&);
    auto assoc_comm = [](const char* name, BinOp op) {
        return [name, op](InstanceGenerator& gen, int n, LawReport& rep) {
            run_forall(gen, n, rep, [name, op](InstanceGenerator& g, std::string& w) {
                auto abc = g.arrays(3);
                const FuzzyArray& a = abc[0];
                const FuzzyArray& b = abc[1];
                const FuzzyArray& c = abc[2];
                if (!strong_equiv(op(a, b), op(b, a))) {
                    w = two_sides((std::string(name) + " commutativity").c_str(), op(a, b),
                                  op(b, a));
                    return false;
                }
                FuzzyArray lhs = op(op(a, b), c);
                FuzzyArray rhs = op(a, op(b, c));
                if (!strong_equiv(lhs, rhs)) {
                    w = two_sides((std::string(name) + " associativity").c_str(), lhs, rhs);
                    return false;
                }
                return true;
            });
        };
    };
    laws.push_back({"djunion-assoc-comm", 3, LawExpectation::Holds,
                    assoc_comm("disjoint union", &disjoint_union)});
    laws.push_back({"union-assoc-comm", 3, LawExpectation::Holds,
                    assoc_comm("union", &fuzzy_union)});
    laws.push_back({"inter-assoc-comm", 3, LawExpectation::Holds,
                    assoc_comm("intersection", &fuzzy_intersection)});

    auto dist_over_djunion = [](const char* name, BinOp op) {
        return [name, op](InstanceGenerator& gen, int n, LawReport& rep) {
            run_forall(gen, n, rep, [name, op](InstanceGenerator& g, std::string& w) {
                auto abc = g.arrays(3);
                FuzzyArray lhs = disjoint_union(abc[0], op(abc[1], abc[2]));
                FuzzyArray rhs =
                    op(disjoint_union(abc[0], abc[1]), disjoint_union(abc[0], abc[2]));
                if (strong_equiv(lhs, rhs)) {
                    return true;
                }
                w = two_sides((std::string(name) + " distributes over disjoint union").c_str(),
                              lhs, rhs);
                return false;
            });
        };
    };
    laws.push_back({"cap-dist-djunion", 3, LawExpectation::Holds,
                    dist_over_djunion("intersection", &fuzzy_intersection)});
    laws.push_back({"cup-dist-djunion", 3, LawExpectation::Holds,
                    dist_over_djunion("union", &fuzzy_union)});

    laws.push_back(
        {"djunion-not-dist-cap", 3, LawExpectation::FailsWithWitness,
         [](InstanceGenerator& gen, int n, LawReport& rep) {
             FuzzyArray a = one_row(FuzzyMultiset{1});  // {1, 0} up to equivalence
             FuzzyArray b = one_row(FuzzyMultiset{1, 1});
             FuzzyArray c = one_row(FuzzyMultiset{1, 1});
             FuzzyArray lhs = fuzzy_intersection(a, disjoint_union(b, c));
             FuzzyArray rhs =
                 disjoint_union(fuzzy_intersection(a, b), fuzzy_intersection(a, c));
             bool broken = !strong_equiv(lhs, rhs) &&
                           lhs.phi(one_row_content()) == FuzzyMultiset{1} &&
                           rhs.phi(one_row_content()) == FuzzyMultiset{1, 1};
             run_pinned(gen, n, rep, broken,
                        two_sides("pinned witness no longer breaks the identity", lhs, rhs),
                        [](InstanceGenerator& g) {
                            auto abc = g.arrays(3);
                            return strong_equiv(
                                fuzzy_intersection(abc[0], disjoint_union(abc[1], abc[2])),
                                disjoint_union(fuzzy_intersection(abc[0], abc[1]),
                                               fuzzy_intersection(abc[0], abc[2])));
                        });
         }});

    laws.push_back(
        {"djunion-not-dist-cup", 3, LawExpectation::FailsWithWitness,
         [](InstanceGenerator& gen, int n, LawReport& rep) {
             FuzzyArray a = one_row(FuzzyMultiset{1, 1});
             FuzzyArray b = one_row(FuzzyMultiset{1});  // {1, 0}
             FuzzyArray c = one_row(FuzzyMultiset{1});
             FuzzyArray lhs = fuzzy_union(a, disjoint_union(b, c));
             FuzzyArray rhs = disjoint_union(fuzzy_union(a, b), fuzzy_union(a, c));
             bool broken = !strong_equiv(lhs, rhs) &&
                           lhs.phi(one_row_content()) == FuzzyMultiset{1, 1} &&
                           rhs.phi(one_row_content()) == FuzzyMultiset{1, 1, 1, 1};
             run_pinned(gen, n, rep, broken,
                        two_sides("pinned witness no longer breaks the identity", lhs, rhs),
                        [](InstanceGenerator& g) {
                            auto abc = g.arrays(3);
                            return strong_equiv(
                                fuzzy_union(abc[0], disjoint_union(abc[1], abc[2])),
                                disjoint_union(fuzzy_union(abc[0], abc[1]),
                                               fuzzy_union(abc[0], abc[2])));
                        });
         }});

    laws.push_back({"diff-self-zero", 1, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            FuzzyArray a = g.arrays(1)[0];
                            FuzzyArray d = difference(a, a);
                            if (strong_equiv(d, zero_array())) {
                                return true;
                            }
                            w = two_sides("A \\ A vs zero", d, zero_array());
                            return false;
                        });
                    }});

    laws.push_back({"diff-union-subset", 3, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_inclusion(
                            gen, n, rep,
                            [](InstanceGenerator& g) {
                                auto abc = g.arrays(3);
                                FuzzyArray lhs = fuzzy_union(difference(abc[0], abc[2]),
                                                             difference(abc[1], abc[2]));
                                FuzzyArray rhs =
                                    difference(fuzzy_union(abc[0], abc[1]), abc[2]);
                                return std::make_pair(std::move(lhs), std::move(rhs));
                            },
                            "(A\\C) u (B\\C) vs (A u B)\\C");
                    }});

    laws.push_back({"diff-cap-subset", 3, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_inclusion(
                            gen, n, rep,
                            [](InstanceGenerator& g) {
                                auto abc = g.arrays(3);
                                FuzzyArray lhs = fuzzy_union(difference(abc[0], abc[1]),
                                                             difference(abc[0], abc[2]));
                                FuzzyArray rhs = difference(
                                    abc[0], fuzzy_intersection(abc[1], abc[2]));
                                return std::make_pair(std::move(lhs), std::move(rhs));
                            },
                            "(A\\B) u (A\\C) vs A\\(B n C)");
                    }});

    laws.push_back({"proj-preserves-djunion-strong", 2, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            auto ab = g.arrays(2);
                            auto j = random_col_subset(g);
                            FuzzyArray lhs = project(disjoint_union(ab[0], ab[1]), j);
                            FuzzyArray rhs =
                                disjoint_union(project(ab[0], j), project(ab[1], j));
                            if (strong_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = two_sides("projection over disjoint union", lhs, rhs);
                            return false;
                        });
                    }});

    laws.push_back({"proj-preserves-union-weak", 2, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            auto ab = g.arrays(2);
                            auto j = random_col_subset(g);
                            FuzzyArray lhs = project(fuzzy_union(ab[0], ab[1]), j);
                            FuzzyArray rhs = fuzzy_union(project(ab[0], j), project(ab[1], j));
                            if (weak_equiv(lhs, rhs)) {
                                return true;
                            }
                            w = two_sides("projection over union (weak)", lhs, rhs);
                            return false;
                        });
                    }});

    // The projection counterexample arrays: rows r and t agree on J = {k}.
    auto proj_pinned_arrays = [] {
        ColumnKey keep{"k"};
        ColumnKey drop{"e"};
        Row r;
        r.set(keep, CellValue::text("v"));
        r.set(drop, CellValue::integer(1));
        Row t;
        t.set(keep, CellValue::text("v"));
        t.set(drop, CellValue::integer(2));
        FuzzyArray a = array_of({{r, FuzzyMultiset{0.5, 0.5}}, {t, FuzzyMultiset{1}}});
        FuzzyArray b = array_of({{r, FuzzyMultiset{1}}, {t, FuzzyMultiset{0.5, 0.5}}});
        Row s;
        s.set(keep, CellValue::text("v"));
        return std::make_tuple(a, b, std::set<ColumnKey>{keep}, s);
    };

    laws.push_back(
        {"proj-not-union-strong", 2, LawExpectation::FailsWithWitness,
         [proj_pinned_arrays](InstanceGenerator& gen, int n, LawReport& rep) {
             auto [a, b, j, s] = proj_pinned_arrays();
             FuzzyArray lhs = project(fuzzy_union(a, b), j);
             FuzzyArray rhs = fuzzy_union(project(a, j), project(b, j));
             bool broken = !strong_equiv(lhs, rhs) &&
                           lhs.phi(s) == FuzzyMultiset{1, 1, 0.5, 0.5} &&
                           rhs.phi(s) == FuzzyMultiset{1, 0.5, 0.5};
             run_pinned(gen, n, rep, broken,
                        two_sides("pinned witness no longer breaks the identity", lhs, rhs),
                        [](InstanceGenerator& g) {
                            auto ab = g.arrays(2);
                            auto jj = random_col_subset(g);
                            return strong_equiv(
                                project(fuzzy_union(ab[0], ab[1]), jj),
                                fuzzy_union(project(ab[0], jj), project(ab[1], jj)));
                        });
         }});

    laws.push_back(
        {"proj-not-cap-weak", 2, LawExpectation::FailsWithWitness,
         [proj_pinned_arrays](InstanceGenerator& gen, int n, LawReport& rep) {
             auto [a, b, j, s] = proj_pinned_arrays();
             FuzzyArray lhs = project(fuzzy_intersection(a, b), j);
             FuzzyArray rhs = fuzzy_intersection(project(a, j), project(b, j));
             bool broken = !weak_equiv(lhs, rhs) && lhs.phi(s) == FuzzyMultiset{0.5, 0.5} &&
                           rhs.phi(s) == FuzzyMultiset{1, 0.5, 0.5};
             run_pinned(gen, n, rep, broken,
                        two_sides("pinned witness no longer breaks the identity", lhs, rhs),
                        [](InstanceGenerator& g) {
                            auto ab = g.arrays(2);
                            auto jj = random_col_subset(g);
                            return weak_equiv(
                                project(fuzzy_intersection(ab[0], ab[1]), jj),
                                fuzzy_intersection(project(ab[0], jj), project(ab[1], jj)));
                        });
         }});

    laws.push_back(
        {"proj-not-diff-weak", 2, LawExpectation::FailsWithWitness,
         [proj_pinned_arrays](InstanceGenerator& gen, int n, LawReport& rep) {
             auto [a, b, j, s] = proj_pinned_arrays();
             FuzzyArray lhs = project(difference(a, b), j);
             FuzzyArray rhs = difference(project(a, j), project(b, j));
             bool broken = !weak_equiv(lhs, rhs) && lhs.phi(s) == FuzzyMultiset{1, 0.5} &&
                           rhs.phi(s) == FuzzyMultiset{};
             run_pinned(gen, n, rep, broken,
                        two_sides("pinned witness no longer breaks the identity", lhs, rhs),
                        [](InstanceGenerator& g) {
                            auto ab = g.arrays(2);
                            auto jj = random_col_subset(g);
                            return weak_equiv(
                                project(difference(ab[0], ab[1]), jj),
                                difference(project(ab[0], jj), project(ab[1], jj)));
                        });
         }});

    laws.push_back({"padding-preservation", 2, LawExpectation::Holds,
                    [](InstanceGenerator& gen, int n, LawReport& rep) {
                        run_forall(gen, n, rep, [](InstanceGenerator& g, std::string& w) {
                            auto ab = g.arrays(2);
                            const FuzzyArray& a = ab[0];
                            const FuzzyArray& b = ab[1];
                            std::set<RowKey> fresh_rows{RowKey::user("pad1"),
                                                        RowKey::user("pad2")};
                            std::set<ColumnKey> fresh_cols{ColumnKey{"padcol"}};
                            FuzzyArray pa = pad_fuzzy(a, fresh_rows, fresh_cols);
                            FuzzyArray pb = pad_fuzzy(b, fresh_rows, fresh_cols);

                            auto j = random_col_subset(g);
                            auto psi = g.condition();
                            auto theta = g.theta();

                            auto check = [&](const char* what, const FuzzyArray& padded,
                                             const FuzzyArray& plain) {
                                if (strong_equiv(padded, plain)) {
                                    return true;
                                }
                                w = two_sides(what, padded, plain);
                                return false;
                            };
                            std::map<ColumnKey, ColumnKey> f;
                            std::map<ColumnKey, ColumnKey> f_padded;
                            for (const ColumnKey& c : a.base().col_keys()) {
                                f.emplace(c, ColumnKey{c.name() + "_r"});
                            }
                            for (const ColumnKey& c : pa.base().col_keys()) {
                                f_padded.emplace(c, ColumnKey{c.name() + "_r"});
                            }
                            return check("project after padding", project(pa, j),
                                         project(a, j)) &&
                                   check("select after padding", select(pa, psi.fn),
                                         select(a, psi.fn)) &&
                                   check("rename after padding", rename(pa, f_padded),
                                         rename(a, f)) &&
                                   check("disjoint union after padding", disjoint_union(pa, pb),
                                         disjoint_union(a, b)) &&
                                   check("union after padding", fuzzy_union(pa, pb),
                                         fuzzy_union(a, b)) &&
                                   check("intersection after padding",
                                         fuzzy_intersection(pa, pb), fuzzy_intersection(a, b)) &&
                                   check("difference after padding", difference(pa, pb),
                                         difference(a, b)) &&
                                   check("theta join after padding",
                                         theta_join(pa, pb, theta.theta),
                                         theta_join(a, b, theta.theta));
                        });
                    }});

    return laws;
}

}  // namespace

const std::vector<LawCase>& law_registry() {
    static const std::vector<LawCase> registry = build_registry();
    return registry;
}

std::vector<std::string> law_ids() {
    std::vector<std::string> ids;
    for (const LawCase& law : law_registry()) {
        ids.push_back(law.id);
    }
    return ids;
}

LawReport check_law(const LawCase& law, std::uint64_t seed, int n) {
    LawReport rep;
    rep.law_id = law.id;
    rep.expected = law.expected;
    rep.instances = n;
    rep.seed = seed;
    InstanceGenerator gen(seed ^ fnv1a(law.id));  // independent stream per law
    law.run(gen, n, rep);
    return rep;
}

LawReport check_law(const std::string& law_id, std::uint64_t seed, int n) {
    for (const LawCase& law : law_registry()) {
        if (law.id == law_id) {
            return check_law(law, seed, n);
        }
    }
    throw std::invalid_argument("unknown law id: " + law_id);
}

std::vector<LawReport> check_all_laws(std::uint64_t seed, int n) {
    std::vector<LawReport> reps;
    for (const LawCase& law : law_registry()) {
        reps.push_back(check_law(law, seed, n));
    }
    return reps;
}

std::string report_line(const LawReport& rep) {
    std::string line = "LAW " + rep.law_id + (rep.as_expected ? " PASS" : " FAIL") +
                       " seed=" + std::to_string(rep.seed) + " n=" + std::to_string(rep.instances);
    if (rep.expected == LawExpectation::FailsWithWitness) {
        line += " expected=counterexample";
        if (rep.random_violations >= 0) {
            line += " random_violations=" + std::to_string(rep.random_violations);
        }
    }
    if (rep.strict_count >= 0) {
        line += " strict=" + std::to_string(rep.strict_count);
    }
    return line;
}

CoherenceReport check_formula_coherence(std::uint64_t seed, int n) {
    CoherenceReport rep;
    rep.instances = n;
    InstanceGenerator gen(seed ^ fnv1a("formula-coherence"));
    auto note = [&](const char* what, int i) {
        ++rep.failures;
        if (rep.first_failure.empty()) {
            rep.first_failure = std::string(what) + " at instance " + std::to_string(i + 1);
        }
    };
    for (int i = 0; i < n; ++i) {
        auto ab = gen.arrays(2);
        const FuzzyArray& a = ab[0];
        const FuzzyArray& b = ab[1];

        StandardArray native_sqcup = standard_union(a.base(), b.base());
        StandardArray formulaic = from_math(
            formula_sqcup(to_math(a.base()), to_math(b.base())), decode_plain_col);
        if (!oracle_equiv(formulaic, native_sqcup)) {
            note("standard union vs formula", i);
        }

        StandardArray dup = gen.standard_array();
        if (!oracle_equiv(from_math(formula_omega(to_math(dup)), decode_plain_col),
                          regularize(dup))) {
            note("regularization vs formula", i);
        }

        std::set<RowKey> fresh_rows{RowKey::user("w1"), RowKey::user("w2")};
        std::set<ColumnKey> fresh_cols{ColumnKey{"w"}};
        std::set<MKey> m_rows;
        std::set<MKey> m_cols;
        for (const RowKey& k : fresh_rows) {
            m_rows.insert(MKey::row(k));
        }
        for (const ColumnKey& c : fresh_cols) {
            m_cols.insert(MKey::col(c));
        }
        if (!oracle_equiv(from_math(formula_pad(to_math(a.base()), m_rows, m_cols),
                                    decode_plain_col),
                          pad(a.base(), fresh_rows, fresh_cols))) {
            note("padding vs formula", i);
        }

        std::map<ColumnKey, ColumnKey> f;
        std::map<MKey, MKey> mf;
        for (const ColumnKey& c : a.base().col_keys()) {
            ColumnKey to{c.name() + "_r"};
            f.emplace(c, to);
            mf.emplace(MKey::col(c), MKey::col(to));
        }
        if (!oracle_equiv(from_math(formula_rename(to_math(a.base()), mf), decode_plain_col),
                          rename(a, f).base())) {
            note("renaming vs formula", i);
        }

        auto theta = gen.theta();
        std::set<MKey> a0;
        std::set<MKey> b0;
        for (const auto& [k, r] : a.nonzero_rows()) {
            a0.insert(MKey::row(k));
        }
        for (const auto& [k, r] : b.nonzero_rows()) {
            b0.insert(MKey::row(k));
        }
        FuzzyArray native_join = theta_join(a, b, theta.theta);
        StandardArray skeleton = from_math(
            formula_theta_skeleton(to_math(a.base()), a0, to_math(b.base()), b0),
            decode_tagged_col);
        // The formula skeleton also lists rows that pair a zero row with a
        // nonzero one; lifting the fuzzy component over it by the join
        // definition leaves those as zero rows, so the comparison happens
        // where it is meaningful: on the finished fuzzy arrays.
        std::map<RowKey, FuzzyMultiset> lifted;
        for (const RowKey& k : skeleton.row_keys()) {
            Row joined(skeleton.row_or_empty(k));
            Row g;
            Row h;
            for (const auto& [c, v] : joined.cells()) {
                (c.tag() == 1 ? g : h).set(ColumnKey{c.name()}, v);
            }
            Fuzzy deg = theta.theta.fn(g.restricted_to(theta.theta.left_cols),
                                       h.restricted_to(theta.theta.right_cols));
            std::vector<Fuzzy> vs;
            for (Fuzzy x : a.phi(g).values()) {
                for (Fuzzy y : b.phi(h).values()) {
                    vs.push_back(std::min(std::min(x, y), deg));
                }
            }
            FuzzyMultiset m = FuzzyMultiset::canonical(std::move(vs));
            if (!m.empty()) {
                lifted.emplace(k, std::move(m));
            }
        }
        FuzzyArray formula_join = FuzzyArray::make_regular(skeleton, lifted);
        if (!strong_equiv(formula_join, native_join)) {
            note("theta-join skeleton vs formula", i);
        }
    }
    return rep;
}

}  // namespace fuzzydb::law
