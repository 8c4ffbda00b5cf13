// lndeform: exact calculator for actions of the Landweber-Novikov algebra on
// finite rings and their formal deformations.  One binary, subcommand style;
// every number printed is exact.

#include <CLI11.hpp>
#include <iostream>

#include "lnd/io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes, documented in the README:
//   0 success / affirmative verdict      2 negative verdict (located)
//   3 parse error                        4 I/O error
//   5 bound or shape mismatch            6 usage error
//   7 internal invariant failure
enum ExitCode : int {
    kOk = 0,
    kVerdictFail = 2,
    kParse = 3,
    kIo = 4,
    kMismatch = 5,
    kUsage = 6,
    kInternal = 7,
};

struct Report {
    bool structured = false;
    lnd::json body;
    void line(const std::string& s) {
        if (!structured) std::cout << s << "\n";
    }
    void set(const std::string& key, lnd::json v) { body[key] = std::move(v); }
    void flush(const std::string& command, const lnd::json& meta) {
        if (!structured) return;
        lnd::json out{{"tool", "lndeform"}, {"version", kVersion}, {"command", command}};
        for (auto it = meta.begin(); it != meta.end(); ++it) out[it.key()] = it.value();
        out["result"] = body;
        std::cout << lnd::canonical_dump(out);
    }
};

std::string torsion_string(const std::vector<lnd::Int>& torsion) {
    std::string s = "[";
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (i) s += ',';
        s += lnd::to_decimal(torsion[i]);
    }
    return s + "]";
}

template <class R>
lnd::json cohomology_to_json(const lnd::CohomologyResult<R>& h, const R& ring, bool with_reps) {
    lnd::json torsion = lnd::json::array();
    for (const auto& t : h.torsion) torsion.push_back(lnd::to_decimal(t));
    lnd::json out{{"rank", h.free_rank}, {"torsion", torsion}};
    if (with_reps) {
        lnd::json reps = lnd::json::array();
        for (const auto& r : h.representatives) reps.push_back(lnd::vec_to_json(ring, r));
        out["representatives"] = reps;
    }
    return out;
}

// ----------------------------------------------------------- validate ----

int cmd_validate(const std::string& ring_path, const std::string& action_path,
                 const std::string& deformation_path, const std::string& automorphism_path,
                 Report& rep) {
    namespace fs = std::filesystem;
    if (ring_path.empty() && action_path.empty() && deformation_path.empty() &&
        automorphism_path.empty())
        throw std::invalid_argument(
            "validate needs at least one of --ring, --action, --deformation, --automorphism");
    int verdict = kOk;
    lnd::json results = lnd::json::array();
    auto record = [&](const std::string& what, bool ok, const std::string& detail) {
        rep.line(std::string(ok ? "PASS" : "FAIL") + " " + what + (detail.empty() ? "" : ": " + detail));
        results.push_back(lnd::json{{"target", what}, {"ok", ok}, {"detail", detail}});
        if (!ok) verdict = kVerdictFail;
    };

    if (!ring_path.empty()) {
        const auto doc = lnd::load_json_file(ring_path);
        lnd::with_base(lnd::peek_base(doc, fs::path(ring_path).parent_path()), [&](auto base) {
            const auto ring = lnd::ring_from_json(base, doc);
            const auto v = lnd::validate_ring(ring);
            record("ring " + ring_path, !v.has_value(), v ? v->to_string() : "");
        });
    }
    if (!action_path.empty()) {
        const auto dir = fs::path(action_path).parent_path();
        const auto doc = lnd::load_json_file(action_path);
        lnd::with_base(lnd::peek_base(doc, dir), [&](auto base) {
            const auto t = lnd::action_from_json(base, doc, dir);
            const auto rv = lnd::validate_ring(t.ring);
            record("ring of " + action_path, !rv.has_value(), rv ? rv->to_string() : "");
            const auto s = lnd::StructureTable::build(t.bound);
            const auto v = lnd::validate_action(t, s);
            record("action " + action_path, !v.has_value(), v ? v->to_string() : "");
        });
    }
    if (!deformation_path.empty()) {
        const auto dir = fs::path(deformation_path).parent_path();
        const auto doc = lnd::load_json_file(deformation_path);
        lnd::with_base(lnd::peek_base(doc, dir), [&](auto base) {
            const auto d = lnd::deformation_from_json(base, doc, dir);
            const auto s = lnd::StructureTable::build(d.base.bound);
            const auto v = lnd::validate_deformation(d, s);
            record("deformation " + deformation_path, !v.has_value(), v ? v->to_string() : "");
        });
    }
    if (!automorphism_path.empty()) {
        const auto dir = fs::path(automorphism_path).parent_path();
        const auto doc = lnd::load_json_file(automorphism_path);
        lnd::with_base(lnd::peek_base(doc, dir), [&](auto base) {
            const auto p = lnd::automorphism_from_json(base, doc, dir);
            const auto v = lnd::validate_automorphism(p);
            record("automorphism " + automorphism_path, !v.has_value(), v ? v->to_string() : "");
        });
    }
    rep.set("checks", results);
    rep.set("ok", verdict == kOk);
    return verdict;
}

// ----------------------------------------------------------- constants ---

int cmd_constants(const std::string& alpha_text, const std::string& beta_text, long bound,
                  const std::string& dump_path, Report& rep) {
    const auto alpha = lnd::ExpSeq::parse(alpha_text);
    const auto beta = lnd::ExpSeq::parse(beta_text);
    if (alpha.degree() + beta.degree() > bound)
        throw lnd::BoundError("degree(alpha) + degree(beta) exceeds --bound " +
                              std::to_string(bound));
    const auto table = lnd::StructureTable::build(bound);
    lnd::json entries = lnd::json::array();
    for (const auto& [gamma, c] : table.constants(alpha, beta)) {
        if (sgn(c) == 0) continue;
        rep.line("gamma " + gamma.to_string() + " coeff " + lnd::to_decimal(c));
        entries.push_back(
            lnd::json{{"gamma", lnd::seq_to_json(gamma)}, {"coeff", lnd::to_decimal(c)}});
    }
    rep.set("alpha", lnd::seq_to_json(alpha));
    rep.set("beta", lnd::seq_to_json(beta));
    rep.set("constants", entries);
    if (!dump_path.empty()) {
        lnd::save_json_file(dump_path, lnd::structure_table_to_json(table));
        rep.line("wrote " + dump_path);
        rep.set("dump", dump_path);
    }
    return kOk;
}

// ---------------------------------------------------------- cohomology ---

int cmd_cohomology(const std::string& action_path, const std::string& ring_path,
                   const std::string& complex_name, int n, long bound_opt,
                   const std::string& base_override, bool dump_reps, Report& rep) {
    namespace fs = std::filesystem;
    const bool fstar = complex_name == "fstar";
    if (!fstar && complex_name != "hochschild")
        throw std::invalid_argument("--complex must be fstar or hochschild");

    const std::string path = fstar ? action_path : (!ring_path.empty() ? ring_path : action_path);
    if (path.empty()) throw std::invalid_argument("need --action (or --ring for hochschild)");
    const auto dir = fs::path(path).parent_path();
    const auto doc = lnd::load_json_file(path);
    auto base_desc = lnd::peek_base(doc, dir);

    // A base override reinterprets an integer document over Q or Z/p.
    const bool convert = !base_override.empty();
    if (convert && base_desc.kind != lnd::BaseDesc::Kind::Z)
        throw lnd::MismatchError("--base override requires an integer document");

    auto run = [&](auto base) {
        using R = decltype(base);
        if (fstar) {
            auto t0 = lnd::action_from_json(lnd::ZRing{}, doc, dir);
            lnd::ActionTable<R> t = [&] {
                if constexpr (std::is_same_v<R, lnd::ZRing>)
                    return t0;
                else
                    return lnd::convert_action(t0, base);
            }();
            if (bound_opt >= 0) {
                if (bound_opt > t.bound)
                    throw lnd::BoundError("--bound exceeds the bound of the action document");
                t = lnd::restrict_bound(t, bound_opt);
            }
            const auto s = lnd::StructureTable::build(t.bound);
            const auto h = lnd::fstar_cohomology(t, s, n);
            rep.line("H^" + std::to_string(n) + " rank=" + std::to_string(h.free_rank) +
                     " torsion=" + torsion_string(h.torsion));
            if (dump_reps)
                for (const auto& r : h.representatives)
                    rep.line("rep " + lnd::vec_to_json(base, r).dump());
            rep.set("group", "H^" + std::to_string(n));
            rep.set("bound", t.bound);
            rep.set("base", lnd::base_desc_of(base).to_string());
            rep.set("cohomology", cohomology_to_json(h, base, dump_reps));
        } else {
            const lnd::json ring_doc = doc.contains("ring") ? lnd::resolve_ref(doc.at("ring"), dir) : doc;
            auto a0 = lnd::ring_from_json(lnd::ZRing{}, ring_doc);
            lnd::FiniteRing<R> a = [&] {
                if constexpr (std::is_same_v<R, lnd::ZRing>)
                    return a0;
                else
                    return lnd::convert_ring(a0, base);
            }();
            const auto h = lnd::hochschild_cohomology(a, n);
            rep.line("HH^" + std::to_string(n) + " rank=" + std::to_string(h.free_rank) +
                     " torsion=" + torsion_string(h.torsion));
            rep.set("group", "HH^" + std::to_string(n));
            rep.set("base", lnd::base_desc_of(base).to_string());
            rep.set("cohomology", cohomology_to_json(h, base, dump_reps));
        }
    };

    if (convert) {
        lnd::with_base(lnd::BaseDesc::parse(base_override), run);
    } else if (base_desc.kind == lnd::BaseDesc::Kind::Z) {
        run(lnd::ZRing{});
    } else {
        // Non-integer documents are parsed directly in their own base.
        lnd::with_base(base_desc, [&](auto base) {
            if (fstar) {
                auto t = lnd::action_from_json(base, doc, dir);
                if (bound_opt >= 0) t = lnd::restrict_bound(t, bound_opt);
                const auto s = lnd::StructureTable::build(t.bound);
                const auto h = lnd::fstar_cohomology(t, s, n);
                rep.line("H^" + std::to_string(n) + " rank=" + std::to_string(h.free_rank) +
                         " torsion=" + torsion_string(h.torsion));
                rep.set("group", "H^" + std::to_string(n));
                rep.set("bound", t.bound);
                rep.set("base", lnd::base_desc_of(base).to_string());
                rep.set("cohomology", cohomology_to_json(h, base, dump_reps));
            } else {
                const lnd::json ring_doc =
                    doc.contains("ring") ? lnd::resolve_ref(doc.at("ring"), dir) : doc;
                const auto a = lnd::ring_from_json(base, ring_doc);
                const auto h = lnd::hochschild_cohomology(a, n);
                rep.line("HH^" + std::to_string(n) + " rank=" + std::to_string(h.free_rank) +
                         " torsion=" + torsion_string(h.torsion));
                rep.set("group", "HH^" + std::to_string(n));
                rep.set("base", lnd::base_desc_of(base).to_string());
                rep.set("cohomology", cohomology_to_json(h, base, dump_reps));
            }
        });
    }
    return kOk;
}

// -------------------------------------------------------------- extend ---

int cmd_extend(const std::string& deformation_path, int to_order, const std::string& emit_path,
               Report& rep) {
    namespace fs = std::filesystem;
    const auto dir = fs::path(deformation_path).parent_path();
    const auto doc = lnd::load_json_file(deformation_path);
    int code = kOk;
    lnd::with_base(lnd::peek_base(doc, dir), [&](auto base) {
        auto d = lnd::deformation_from_json(base, doc, dir);
        rep.set("base", lnd::base_desc_of(base).to_string());
        const auto s = lnd::StructureTable::build(d.base.bound);
        if (auto v = lnd::validate_deformation(d, s)) {
            rep.line("input deformation invalid: " + v->to_string());
            rep.set("ok", false);
            rep.set("error", "invalid input: " + v->to_string());
            code = kVerdictFail;
            return;
        }
        long freedom = 0;
        bool stepped = false;
        while (d.order < to_order) {
            auto ext = lnd::extend_deformation(d, s);
            if (ext.obstructed()) {
                rep.line("obstructed at order " + std::to_string(d.order + 1) +
                         ": the obstruction class is a certified 2-cocycle with no preimage");
                rep.set("ok", false);
                rep.set("obstructed_at", d.order + 1);
                code = kVerdictFail;
                return;
            }
            freedom = ext.solution_freedom;
            stepped = true;
            d = std::move(*ext.extended);
        }
        if (stepped) rep.set("solution_freedom", freedom);
        rep.line("extended to order " + std::to_string(d.order));
        rep.set("ok", true);
        rep.set("order", d.order);
        if (!emit_path.empty()) {
            lnd::save_json_file(emit_path, lnd::deformation_to_json(d));
            rep.line("wrote " + emit_path);
            rep.set("emit", emit_path);
        }
    });
    return code;
}

// --------------------------------------------------------- equivalence ---

int cmd_equivalence(const std::string& left_path, const std::string& right_path,
                    const std::string& witness_path, Report& rep) {
    namespace fs = std::filesystem;
    const auto ldoc = lnd::load_json_file(left_path);
    const auto rdoc = lnd::load_json_file(right_path);
    int code = kOk;
    lnd::with_base(lnd::peek_base(ldoc, fs::path(left_path).parent_path()), [&](auto base) {
        using R = decltype(base);
        const auto left = lnd::deformation_from_json(base, ldoc, fs::path(left_path).parent_path());
        const auto right =
            lnd::deformation_from_json(base, rdoc, fs::path(right_path).parent_path());
        const auto s = lnd::StructureTable::build(left.base.bound);
        const auto eq = lnd::equivalent_extensions(left, right, s);
        if (eq.status == lnd::ExtensionEquivalence<R>::Status::Witness) {
            rep.line("equivalent: witness automorphism of order " +
                     std::to_string(eq.witness->order) + " found");
            rep.set("verdict", "equivalent");
            if (!witness_path.empty()) {
                lnd::save_json_file(witness_path, lnd::automorphism_to_json(*eq.witness));
                rep.line("wrote " + witness_path);
                rep.set("witness", witness_path);
            }
        } else {
            rep.line("unknown: the difference class is nonzero in degree-1 cohomology; "
                     "no equivalence verdict");
            rep.set("verdict", "unknown");
            code = kVerdictFail;
        }
    });
    return code;
}

// ------------------------------------------------------------ rigidity ---

int cmd_rigidity(const std::string& action_path, long bound_opt, int max_order,
                 std::uint64_t seed, Report& rep) {
    namespace fs = std::filesystem;
    const auto dir = fs::path(action_path).parent_path();
    const auto doc = lnd::load_json_file(action_path);
    int code = kOk;
    lnd::with_base(lnd::peek_base(doc, dir), [&](auto base) {
        auto t = lnd::action_from_json(base, doc, dir);
        if (bound_opt >= 0) {
            if (bound_opt > t.bound)
                throw lnd::BoundError("--bound exceeds the bound of the action document");
            t = lnd::restrict_bound(t, bound_opt);
        }
        const auto s = lnd::StructureTable::build(t.bound);
        const auto r = lnd::rigidity_certificate(t, s, max_order, seed);
        rep.set("base", lnd::base_desc_of(t.ring.base).to_string());
        rep.line("H^1 " + r.h1.to_string());
        rep.line("HH^2 " + r.hh2.to_string());
        rep.set("h1", cohomology_to_json(r.h1, t.ring.base, false));
        rep.set("hh2", cohomology_to_json(r.hh2, t.ring.base, false));
        rep.set("seed", r.seed);
        rep.set("bound", t.bound);
        rep.set("max_order", max_order);
        if (r.certified) {
            std::string levels;
            for (int l : r.gauged_levels) levels += (levels.empty() ? "" : ",") + std::to_string(l);
            rep.line("RIGID at bound " + std::to_string(t.bound) + " order " +
                     std::to_string(max_order) + " (seed " + std::to_string(seed) + ")");
            rep.line("demo: seeded order-" + std::to_string(max_order) +
                     " deformation gauged to trivial, levels cleared [" + levels + "]");
            rep.set("verdict", "rigid");
            rep.set("gauged_levels", r.gauged_levels);
        } else {
            rep.line("NOT certified: " + r.blocking + " is nonzero");
            rep.set("verdict", "not-certified");
            rep.set("blocking", r.blocking);
            if (r.blocking == "H1") {
                rep.line(std::string("representative: is_cocycle=") +
                         (r.rep_is_cocycle ? "true" : "false") +
                         " coboundary_solve=" + (r.rep_not_coboundary ? "infeasible" : "solvable"));
                rep.set("representative", lnd::vec_to_json(t.ring.base, r.representative));
                rep.set("rep_is_cocycle", r.rep_is_cocycle);
                rep.set("rep_not_coboundary", r.rep_not_coboundary);
            }
            code = kVerdictFail;
        }
    });
    return code;
}

// ---------------------------------------------------------------- demo ---

int cmd_demo(const std::string& out_dir, Report& rep) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const lnd::ZRing z;
    auto emit = [&](const std::string& name, const lnd::json& doc) {
        const auto path = fs::path(out_dir) / name;
        lnd::save_json_file(path, doc);
        rep.line("wrote " + path.string());
    };

    emit("ring_z.json", lnd::ring_to_json(lnd::scalar_ring(z)));
    emit("ring_dual.json", lnd::ring_to_json(lnd::dual_numbers(z)));
    emit("ring_dual_f2.json", lnd::ring_to_json(lnd::dual_numbers(lnd::ZpRing(2))));

    emit("action_trivial_z.json", lnd::action_to_json(lnd::trivial_instance(lnd::scalar_ring(z), 2)));
    const auto trivial_dual = lnd::trivial_instance(lnd::dual_numbers(z), 2);
    emit("action_trivial_dual.json", lnd::action_to_json(trivial_dual));
    auto [cring, caction] = lnd::canonical_instance(2);
    emit("action_canonical2.json", lnd::action_to_json(caction));

    // First-order deformation of the trivial dual-number instance: the
    // degree-2 coefficients balance the product identity.
    const auto ders = lnd::derivation_basis(trivial_dual.ring);
    lnd::Deformation<lnd::ZRing> d = lnd::trivial_deformation(trivial_dual, 1);
    d.coeffs[0].set_matrix(lnd::ExpSeq::from_dense({1}), ders.at(0));
    d.coeffs[0].set_matrix(lnd::ExpSeq::from_dense({2}), ders.at(0).scale(lnd::Int(2)));
    d.coeffs[0].set_matrix(lnd::ExpSeq::from_dense({0, 1}), ders.at(0).scale(lnd::Int(-2)));
    emit("deformation_first_order.json", lnd::deformation_to_json(d));
    emit("deformation_trivial.json",
         lnd::deformation_to_json(lnd::trivial_deformation(trivial_dual, 1)));

    // Substitution automorphism of the canonical ring.
    lnd::Rng rng(1);
    const auto p = lnd::seeded_automorphism(cring, 2, rng);
    emit("automorphism_canonical.json", lnd::automorphism_to_json(p));

    rep.set("dir", out_dir);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation calculator for algebras over the Landweber-Novikov algebra"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // validate
    auto* validate = app.add_subcommand("validate", "validate documents");
    std::string v_ring, v_action, v_deformation, v_automorphism;
    validate->add_option("--ring", v_ring, "ring document");
    validate->add_option("--action", v_action, "action document");
    validate->add_option("--deformation", v_deformation, "deformation document");
    validate->add_option("--automorphism", v_automorphism, "automorphism document");

    // constants
    auto* constants = app.add_subcommand("constants", "structure constants of a product");
    std::string c_alpha = "[]", c_beta = "[]", c_dump;
    long c_bound = 4;
    constants->add_option("--alpha", c_alpha, "first sequence, e.g. [1]");
    constants->add_option("--beta", c_beta, "second sequence");
    constants->add_option("--bound", c_bound, "truncation bound (default 4)");
    constants->add_option("--dump", c_dump, "write the whole table to this file");

    // cohomology
    auto* cohomology = app.add_subcommand("cohomology", "cohomology groups");
    std::string h_action, h_ring, h_complex = "fstar", h_base;
    int h_n = 1;
    long h_bound = -1;
    bool h_reps = false;
    cohomology->add_option("--action", h_action, "action document");
    cohomology->add_option("--ring", h_ring, "ring document (hochschild)");
    cohomology->add_option("--complex", h_complex, "fstar or hochschild");
    cohomology->add_option("--n", h_n, "degree");
    cohomology->add_option("--bound", h_bound, "restrict to a smaller bound");
    cohomology->add_option("--base", h_base, "override base: Z, Q or Zmod:p");
    cohomology->add_flag("--dump-reps", h_reps, "print representative cocycles");

    // extend
    auto* extend = app.add_subcommand("extend", "extend a deformation order by order");
    std::string e_deformation, e_emit;
    int e_order = 0;
    extend->add_option("--deformation", e_deformation, "deformation document")->required();
    extend->add_option("--to-order", e_order, "target order")->required();
    extend->add_option("--emit", e_emit, "write the extended deformation here");

    // equivalence
    auto* equivalence = app.add_subcommand("equivalence", "compare two extensions");
    std::string q_left, q_right, q_witness;
    equivalence->add_option("--left", q_left, "first deformation document")->required();
    equivalence->add_option("--right", q_right, "second deformation document")->required();
    equivalence->add_option("--emit-witness", q_witness, "write the witness automorphism here");

    // rigidity
    auto* rigidity = app.add_subcommand("rigidity", "rigidity certificate");
    std::string r_action;
    long r_bound = -1;
    int r_max_order = 3;
    std::uint64_t r_seed = 0;
    rigidity->add_option("--action", r_action, "action document")->required();
    rigidity->add_option("--bound", r_bound, "restrict to a smaller bound");
    rigidity->add_option("--max-order", r_max_order, "demo deformation order");
    rigidity->add_option("--seed", r_seed, "seed for the demo deformation");

    // demo
    auto* demo = app.add_subcommand("demo", "write built-in example documents");
    std::string d_out = "demo";
    demo->add_option("--out", d_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Report rep;
    rep.structured = format == "json";
    lnd::json meta;
    std::string command;
    int code = kOk;
    try {
        if (*validate) {
            command = "validate";
            code = cmd_validate(v_ring, v_action, v_deformation, v_automorphism, rep);
        } else if (*constants) {
            command = "constants";
            meta["bound"] = c_bound;
            code = cmd_constants(c_alpha, c_beta, c_bound, c_dump, rep);
        } else if (*cohomology) {
            command = "cohomology";
            code = cmd_cohomology(h_action, h_ring, h_complex, h_n, h_bound, h_base, h_reps, rep);
        } else if (*extend) {
            command = "extend";
            code = cmd_extend(e_deformation, e_order, e_emit, rep);
        } else if (*equivalence) {
            command = "equivalence";
            code = cmd_equivalence(q_left, q_right, q_witness, rep);
        } else if (*rigidity) {
            command = "rigidity";
            meta["seed"] = r_seed;
            code = cmd_rigidity(r_action, r_bound, r_max_order, r_seed, rep);
        } else if (*demo) {
            command = "demo";
            code = cmd_demo(d_out, rep);
        }
    } catch (const lnd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const lnd::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIo;
    } catch (const lnd::BoundError& e) {
        std::cerr << "bound error: " << e.what() << "\n";
        return kMismatch;
    } catch (const lnd::MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const lnd::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    rep.flush(command, meta);
    return code;
}
