// bialg: exact verification, construction, and census of bialgebra-type
// structures given by structure constants. See README.md for the file format
// and the command overview.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bialg/catalog.hpp"
#include "bialg/census.hpp"
#include "bialg/classify.hpp"
#include "bialg/constructions.hpp"
#include "bialg/io.hpp"
#include "bialg/polysys.hpp"

using namespace bialg;
using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPostcondition = 3;

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::string human_report(const CheckReport& rep, size_t max_lines = 30) {
    std::string s = rep.passed ? "PASS" : "FAIL";
    if (!rep.theta.empty()) s += " (theta = " + rep.theta + ")";
    s += "\n";
    size_t shown = 0;
    for (const auto& r : rep.residuals) {
        if (shown++ == max_lines) {
            s += "  ... " + std::to_string(rep.residuals.size() - max_lines) + " more residuals\n";
            break;
        }
        s += "  " + (r.context.empty() ? "" : r.context + " ") + r.axiom + " at (";
        for (size_t i = 0; i < r.indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(r.indices[i]);
        }
        s += ") = " + r.value + "\n";
    }
    return s;
}

template <class S>
Bundle<S> rekind(Bundle<S> b, BundleKind kind, const std::string& theta_str) {
    b.kind = kind;
    if (kind == BundleKind::Infinitesimal) {
        b.theta = S::parse(b.field(), theta_str.empty() ? "1" : theta_str);
    } else {
        b.theta.reset();
    }
    b.validate_shape();
    return b;
}

/// "--field Q" is the identity on Q bundles; "--field Fp:<p>" reduces a Q
/// bundle entrywise (an error on F_p bundles over a different modulus).
std::optional<Fp::Field> parse_field_flag(const std::string& spec) {
    if (spec.empty() || spec == "Q") return std::nullopt;
    if (spec.rfind("Fp:", 0) == 0) {
        Fp::Field F{std::stoull(spec.substr(3))};
        Fp::check_prime(F.p);
        return F;
    }
    throw ParseError("--field must be Q or Fp:<prime>");
}

io::AnyBundle apply_field_flag(const io::AnyBundle& b, const std::string& field_spec) {
    auto F = parse_field_flag(field_spec);
    if (!F) {
        if (!field_spec.empty() && std::holds_alternative<Bundle<Fp>>(b))
            throw FieldMismatch("cannot lift an F_p structure to Q");
        return b;
    }
    if (std::holds_alternative<Bundle<Fp>>(b)) {
        if (!(std::get<Bundle<Fp>>(b).field() == *F))
            throw FieldMismatch("file is over a different F_p");
        return b;
    }
    return reduce_mod(std::get<Bundle<Rational>>(b), *F);
}

struct CheckOptions {
    std::string file;
    std::string kind_override;
    std::string theta = "";
    std::string field;
    std::string output;
    bool machine = false;
};

int run_check(const CheckOptions& opt) {
    io::StructureFile f = io::load(opt.file);
    CheckReport rep = std::visit(
        [&](auto b) {
            if (!opt.kind_override.empty())
                b = rekind(b, io::kind_from_string(opt.kind_override), opt.theta);
            else if (b.kind == BundleKind::Infinitesimal && !opt.theta.empty())
                b = rekind(b, BundleKind::Infinitesimal, opt.theta);
            return check_bundle(b);
        },
        apply_field_flag(f.bundle, opt.field));
    write_or_print(opt.machine ? io::report_json(rep) : human_report(rep), opt.output);
    return rep.passed ? 0 : kExitCheckFailed;
}

struct ConstructOptions {
    std::string what;
    std::string input, input2;
    std::string output;
    bool machine = false;
};

template <class S>
int run_construct_typed(const ConstructOptions& opt, const Bundle<S>& a_raw, const Bundle<S>* b_raw) {
    auto as_algebra = [](const Bundle<S>& b) {
        if (b.mults.empty()) throw ParseError("construction inputs must contain a multiplication");
        return UnitalAlgebraInput<S>(b.mults[0]);
    };
    UnitalAlgebraInput<S> a = as_algebra(a_raw);

    auto emit = [&](const Bundle<S>& b, const CheckReport& rep, const std::string& path,
                    const std::string& name) {
        io::save(io::StructureFile{name, b}, path);
        std::cout << path << ": " << (opt.machine ? io::report_json(rep) : human_report(rep));
        return rep.passed ? 0 : kExitPostcondition;
    };

    if (opt.what == "k1" || opt.what == "k2") {
        BialgebraData<S> out = opt.what == "k1" ? kaplansky_k1(a) : kaplansky_k2(a);
        Bundle<S> b = out.as_bundle(BundleKind::Bialgebra);
        return emit(b, check_bundle(b), opt.output, opt.what + " output");
    }
    if (!b_raw) throw ParseError("construction '" + opt.what + "' needs --input2");
    UnitalAlgebraInput<S> a2 = as_algebra(*b_raw);
    if (opt.what == "2as") {
        BuiltBundle<S> out = build_2as(a, a2);
        return emit(out.bundle, out.report, opt.output, "2as output");
    }
    if (opt.what == "22b") {
        BuiltBundle<S> out = build_22b(a, a2);
        return emit(out.bundle, out.report, opt.output, "22b output");
    }
    if (opt.what == "2b") {
        auto [b1, b2] = build_2b(a, a2);
        std::filesystem::path base(opt.output);
        std::filesystem::path p1 = base.parent_path() / (base.stem().string() + "_b1.json");
        std::filesystem::path p2 = base.parent_path() / (base.stem().string() + "_b2.json");
        int r1 = emit(b1.bundle, b1.report, p1.string(), "2b output B1");
        int r2 = emit(b2.bundle, b2.report, p2.string(), "2b output B2");
        return r1 != 0 ? r1 : r2;
    }
    throw ParseError("unknown construction '" + opt.what + "'");
}

int run_construct(const ConstructOptions& opt) {
    io::StructureFile a = io::load(opt.input);
    std::optional<io::StructureFile> b;
    if (!opt.input2.empty()) b = io::load(opt.input2);
    if (std::holds_alternative<Bundle<Rational>>(a.bundle)) {
        const Bundle<Rational>* second = nullptr;
        if (b) {
            if (!std::holds_alternative<Bundle<Rational>>(b->bundle))
                throw FieldMismatch("construction inputs must share the field");
            second = &std::get<Bundle<Rational>>(b->bundle);
        }
        return run_construct_typed(opt, std::get<Bundle<Rational>>(a.bundle), second);
    }
    const Bundle<Fp>* second = nullptr;
    if (b) {
        if (!std::holds_alternative<Bundle<Fp>>(b->bundle))
            throw FieldMismatch("construction inputs must share the field");
        second = &std::get<Bundle<Fp>>(b->bundle);
    }
    return run_construct_typed(opt, std::get<Bundle<Fp>>(a.bundle), second);
}

json census_json(const census::CensusTable& t) {
    json j;
    j["dim"] = t.dim;
    j["per_mult"] = json::array();
    for (const auto& pm : t.per_mult)
        j["per_mult"].push_back({{"mult", pm.mult_id},
                                 {"bialgebras", pm.computed_bialgebras},
                                 {"bialgebras_published", pm.published_bialgebras},
                                 {"bialgebra_ids", pm.bialgebra_ids},
                                 {"infinitesimals", pm.computed_infinitesimals},
                                 {"infinitesimals_published", pm.published_infinitesimals},
                                 {"infinitesimal_ids", pm.infinitesimal_ids}});
    j["trivial_2as"] = json::array();
    for (const auto& p : t.trivial_2as) j["trivial_2as"].push_back({p.mult_id, p.comult_id});
    j["trivial_2as_published"] = t.published_trivial_2as;
    j["nontrivial_2as"] = json::array();
    for (const auto& c : t.nontrivial_2as)
        j["nontrivial_2as"].push_back({{"mults", {c.mult_a, c.mult_b}},
                                       {"comult", c.comult},
                                       {"bial_a_inf_b", c.bial_a_inf_b},
                                       {"bial_b_inf_a", c.bial_b_inf_a}});
    j["nontrivial_2as_published"] = t.published_nontrivial_2as;
    j["type_counts"] = {{"t11", t.type_11},
                        {"t12", t.type_12},
                        {"t21", t.type_21.size()},
                        {"t22", t.type_22.size()},
                        {"published", {t.published_type_11, t.published_type_12, t.published_type_21, t.published_type_22}}};
    j["type_21"] = json::array();
    for (const auto& c : t.type_21) j["type_21"].push_back({c.mult_a, c.mult_b, c.comult});
    j["type_22"] = json::array();
    for (const auto& c : t.type_22) j["type_22"].push_back({c.mult_a, c.mult_b, c.comult_c, c.comult_d});
    j["twotwob_cross"] = json::array();
    for (const auto& c : t.twotwob_cross)
        j["twotwob_cross"].push_back({{"mults", {c.mult_a, c.mult_b}},
                                      {"comults", {c.comult_c, c.comult_d}},
                                      {"distinct_comults", c.distinct_comults},
                                      {"orientations", {c.orient_cd, c.orient_dc}}});
    j["twotwob_published"] = t.published_twotwob;
    j["twotwob_same_mult_mixed"] = t.twotwob_same_mult_mixed;
    j["alias_notes"] = t.alias_notes;
    j["iso_notes"] = json::array();
    for (const auto& n : t.iso_notes)
        j["iso_notes"].push_back({{"from", {n.from.mult_id, n.from.comult_id}},
                                  {"to", {n.to.mult_id, n.to.comult_id}},
                                  {"witness_rows", n.witness_rows}});
    return j;
}

int run_census(int dim, bool machine, const std::string& output) {
    census::CensusTable t = census::run(dim);
    write_or_print(machine ? census_json(t).dump(2) + "\n" : census::render(t), output);
    return 0;
}

int run_catalog_list() {
    for (const auto& e : catalog::entries())
        std::cout << e.id << "  (dim " << e.dim << ", "
                  << (e.kind == catalog::EntryKind::Mult
                          ? "multiplication"
                          : e.kind == catalog::EntryKind::Comult ? "comultiplication" : "bundle")
                  << (e.params.empty() ? "" : ", parameter " + e.params[0]) << ")  -- " << e.provenance << "\n";
    return 0;
}

io::StructureFile entry_file(const std::string& id, const std::optional<Rational>& lambda) {
    const catalog::EntryInfo& e = catalog::info(id);
    catalog::Bindings b;
    if (lambda) b.lambda = *lambda;
    if (e.kind == catalog::EntryKind::Mult) {
        Bundle<Rational> bundle{BundleKind::Algebra, {catalog::get_mult(id)}, {}, catalog::unit_e1(e.dim),
                                std::nullopt};
        return {id, bundle};
    }
    if (e.kind == catalog::EntryKind::Comult) {
        Bundle<Rational> bundle{BundleKind::Coalgebra, {}, {catalog::get_comult(id, b)}, catalog::unit_e1(e.dim),
                                std::nullopt};
        return {id, bundle};
    }
    return {id, catalog::get_bundle(id)};
}

int run_catalog_show(const std::string& id, const std::string& lambda, const std::string& field,
                     const std::string& output) {
    std::optional<Rational> l;
    if (!lambda.empty()) l = Rational::parse({}, lambda);
    io::StructureFile f = entry_file(id, l);
    f.bundle = apply_field_flag(f.bundle, field);
    write_or_print(io::serialize(f), output);
    return 0;
}

int run_catalog_verify(bool machine) {
    auto items = catalog::verify_all();
    bool all = true;
    json arr = json::array();
    for (const auto& it : items) {
        all = all && it.passed;
        if (machine)
            arr.push_back({{"label", it.label}, {"passed", it.passed}, {"residuals", it.residual_count}});
        else
            std::cout << (it.passed ? "ok   " : "FAIL ") << it.label << "\n";
    }
    if (machine) std::cout << json({{"passed", all}, {"items", arr}}).dump(2) << "\n";
    else std::cout << (all ? "all catalog entries verified\n" : "catalog verification FAILED\n");
    return all ? 0 : kExitCheckFailed;
}

int run_catalog_export(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& e : catalog::entries()) {
        io::StructureFile f = entry_file(e.id, std::nullopt);
        io::save(f, (std::filesystem::path(dir) / (e.id + ".json")).string());
    }
    std::cout << "wrote " << catalog::entries().size() << " files to " << dir << "\n";
    return 0;
}

int run_isom(const std::string& f1, const std::string& f2, std::uint64_t p, std::uint64_t budget, bool machine) {
    Fp::Field F{p};
    Fp::check_prime(p);
    auto to_fp = [&](const io::StructureFile& f) {
        if (std::holds_alternative<Bundle<Fp>>(f.bundle)) {
            const auto& b = std::get<Bundle<Fp>>(f.bundle);
            if (!(b.field() == F)) throw FieldMismatch("file is over a different F_p");
            return b;
        }
        return reduce_mod(std::get<Bundle<Rational>>(f.bundle), F); // explicit caller choice via --prime
    };
    Bundle<Fp> b1 = to_fp(io::load(f1)), b2 = to_fp(io::load(f2));
    auto found = classify::isom_search_fp(b1, b2, budget);
    if (machine) {
        json j;
        j["found"] = found.has_value();
        if (found) {
            json rows = json::array();
            for (int r = 0; r < found->rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < found->cols(); ++c) row.push_back(found->at(r, c).str());
                rows.push_back(row);
            }
            j["matrix"] = rows;
        }
        std::cout << j.dump(2) << "\n";
    } else if (found) {
        std::cout << "isomorphism found (columns = images of basis vectors):\n";
        for (int r = 0; r < found->rows(); ++r) {
            for (int c = 0; c < found->cols(); ++c) std::cout << (c ? " " : "  ") << found->at(r, c).str();
            std::cout << "\n";
        }
    } else {
        std::cout << "no isomorphism over F_" << p << " (exhaustive)\n";
    }
    return found ? 0 : kExitCheckFailed;
}

int run_discover(const std::string& file, std::uint64_t p, const std::string& mode_str, const std::string& theta_str,
                 std::uint64_t budget, unsigned threads, const std::string& outdir, bool machine) {
    Fp::Field F{p};
    Fp::check_prime(p);
    io::StructureFile f = io::load(file);
    MultTensor<Fp> m = std::holds_alternative<Bundle<Fp>>(f.bundle)
                           ? std::get<Bundle<Fp>>(f.bundle).mults.at(0)
                           : reduce_mod(std::get<Bundle<Rational>>(f.bundle).mults.at(0), F);
    if (!(m.field() == F)) throw FieldMismatch("file is over a different F_p");

    classify::DiscoverMode mode =
        mode_str == "bialgebra" ? classify::DiscoverMode::Bialgebra : classify::DiscoverMode::Infinitesimal;
    Fp theta = Fp::parse(F, theta_str.empty() ? "1" : theta_str);
    auto found = classify::discover_fp(m, mode, theta, budget, threads);

    json arr = json::array();
    int index = 0;
    for (const auto& c : found) {
        // self-contained pair bundle: re-checkable without the input file
        Bundle<Fp> b{mode == classify::DiscoverMode::Bialgebra ? BundleKind::Bialgebra : BundleKind::Infinitesimal,
                     {m},
                     {c},
                     Vec<Fp>::basis(F, c.dim(), 0),
                     mode == classify::DiscoverMode::Bialgebra ? std::optional<Fp>{} : std::optional<Fp>{theta}};
        io::StructureFile out{"discovered_" + std::to_string(index), b};
        if (!outdir.empty()) {
            std::filesystem::create_directories(outdir);
            char name[32];
            std::snprintf(name, sizeof(name), "discovered_%04d.json", index);
            io::save(out, (std::filesystem::path(outdir) / name).string());
        }
        if (machine) arr.push_back(json::parse(io::serialize(out)));
        ++index;
    }
    if (machine)
        std::cout << json({{"count", found.size()}, {"results", arr}}).dump(2) << "\n";
    else
        std::cout << "found " << found.size() << " comultiplication(s) over F_" << p
                  << (outdir.empty() ? "" : ", written to " + outdir) << "\n";
    return 0;
}

int run_export_system(int n, const std::string& kind, const std::string& output) {
    SystemKind k;
    if (kind == "2as") k = SystemKind::TwoAs;
    else if (kind == "2b") k = SystemKind::TwoB;
    else throw ParseError("system kind must be 2as or 2b");
    write_or_print(export_system(n, k).str(), output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification and census of bialgebra-type structures"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output, field;
    bool machine = false;
    app.add_option("--output", output, "write the result to a file instead of stdout");
    app.add_option("--field", field, "interpret/convert the working field: Q or Fp:<prime>");
    app.add_flag("--machine-readable", machine, "emit JSON instead of prose");

    CheckOptions chk;
    auto* c_check = app.add_subcommand("check", "run the axiom checker on a structure file");
    c_check->add_option("file", chk.file)->required();
    c_check->add_option("--kind", chk.kind_override, "override the file's structure kind");
    c_check->add_option("--theta", chk.theta, "theta for infinitesimal checks (default 1; 0 = derivation variant)");

    ConstructOptions cons;
    auto* c_cons = app.add_subcommand("construct", "k1 / k2 / 2as / 2b / 22b builders");
    c_cons->add_option("what", cons.what)->required()->check(CLI::IsMember({"k1", "k2", "2as", "2b", "22b"}));
    c_cons->add_option("--input", cons.input)->required();
    c_cons->add_option("--input2", cons.input2);

    int census_dim = 3;
    auto* c_census = app.add_subcommand("census", "recompute the classification tables for one dimension");
    c_census->add_option("dim", census_dim)->required()->check(CLI::Range(2, 3));

    auto* c_cat = app.add_subcommand("catalog", "list / show / verify / export the embedded catalog");
    auto* c_list = c_cat->add_subcommand("list", "print ids and provenance");
    std::string show_id, show_lambda, export_dir;
    auto* c_show = c_cat->add_subcommand("show", "print one entry as a structure file");
    c_show->add_option("id", show_id)->required();
    c_show->add_option("--lambda", show_lambda, "binding for parameterized entries");
    auto* c_verify = c_cat->add_subcommand("verify", "re-check every entry");
    auto* c_export = c_cat->add_subcommand("export", "write every entry as a structure file");
    c_export->add_option("--dir", export_dir)->required();
    c_cat->require_subcommand(1);

    std::string isom_f1, isom_f2;
    std::uint64_t prime = 2, budget = classify::kDefaultBudget;
    auto* c_isom = app.add_subcommand("isom", "exhaustive isomorphism search over F_p");
    c_isom->add_option("file1", isom_f1)->required();
    c_isom->add_option("file2", isom_f2)->required();
    c_isom->add_option("--prime", prime, "modulus (Q inputs are reduced entrywise)")->required();
    c_isom->add_option("--budget", budget, "candidate cap");

    std::string disc_file, disc_mode = "bialgebra", disc_theta, disc_outdir;
    unsigned disc_threads = 0;
    auto* c_disc = app.add_subcommand("discover", "enumerate compatible comultiplications over F_p");
    c_disc->add_option("file", disc_file)->required();
    c_disc->add_option("--prime", prime, "modulus (Q inputs are reduced entrywise)")->required();
    c_disc->add_option("--mode", disc_mode)->check(CLI::IsMember({"bialgebra", "infinitesimal"}));
    c_disc->add_option("--theta", disc_theta, "theta for infinitesimal mode (default 1)");
    c_disc->add_option("--budget", budget, "candidate cap");
    c_disc->add_option("--threads", disc_threads, "worker threads (0 = hardware)");
    c_disc->add_option("--output-dir", disc_outdir, "write each find as a structure file");

    int sys_n = 2;
    std::string sys_kind;
    auto* c_sys = app.add_subcommand("export-system", "emit the polynomial system for symbolic constants");
    c_sys->add_option("n", sys_n)->required()->check(CLI::Range(1, kMaxDim));
    c_sys->add_option("kind", sys_kind)->required()->check(CLI::IsMember({"2as", "2b"}));

    try {
        app.parse(argc, argv);
        chk.machine = cons.machine = machine;
        chk.output = output;
        chk.field = field;
        cons.output = output;
        if (*c_check) return run_check(chk);
        if (*c_cons) {
            if (cons.output.empty()) {
                std::cerr << "error: construct requires --output\n";
                return kExitUsage;
            }
            return run_construct(cons);
        }
        if (*c_census) return run_census(census_dim, machine, output);
        if (*c_cat) {
            if (*c_list) return run_catalog_list();
            if (*c_show) return run_catalog_show(show_id, show_lambda, field, output);
            if (*c_verify) return run_catalog_verify(machine);
            if (*c_export) return run_catalog_export(export_dir);
        }
        if (*c_isom) return run_isom(isom_f1, isom_f2, prime, budget, machine);
        if (*c_disc)
            return run_discover(disc_file, prime, disc_mode, disc_theta, budget, disc_threads, disc_outdir, machine);
        if (*c_sys) return run_export_system(sys_n, sys_kind, output);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const classify::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const catalog::UnknownId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
