// isospec: exact computations around almost conjugate subgroup pairs --
// symmetric group character scans, binary polyhedral groups, Goursat fiber
// products, diagonal sign codes, and Weyl-integration volumes.

#include "isospec/characters.hpp"
#include "isospec/golden.hpp"
#include "isospec/goursat.hpp"
#include "isospec/quatgroup.hpp"
#include "isospec/rootvol.hpp"
#include "isospec/signcodes.hpp"
#include "isospec/sunada.hpp"
#include "isospec/symreal.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace isospec;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.2.0";

struct GlobalOptions {
    std::string format = "table";
    int jobs = 1;
    int max_m = 14;
    bool manifest = false;
};

struct ManifestScope {
    ManifestScope(const GlobalOptions& opts, std::string subcommand, json parameters)
        : enabled(opts.manifest),
          start(std::chrono::steady_clock::now()),
          record{{"subcommand", std::move(subcommand)},
                 {"parameters", std::move(parameters)},
                 {"version", kVersion},
                 {"rows", 0}} {}
    ~ManifestScope() {
        if (!enabled) return;
        record["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        std::cerr << record.dump() << "\n";
    }
    void set_rows(size_t rows) { record["rows"] = rows; }

    bool enabled;
    std::chrono::steady_clock::time_point start;
    json record;
};

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            std::cout << row[c];
            if (c + 1 < row.size()) std::cout << std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    print_row(header);
    size_t total = 0;
    for (size_t c = 0; c < header.size(); ++c) total += width[c] + (c + 1 < header.size() ? 2 : 0);
    std::cout << std::string(total, '-') << "\n";
    for (const auto& row : rows) print_row(row);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& row) {
        std::string out;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ",";
            out += csv_escape(row[c]);
        }
        return out;
    };
    std::cout << line(header) << "\n";
    for (const auto& row : rows) std::cout << line(row) << "\n";
}

void emit(const GlobalOptions& opts, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows, const json& as_json) {
    if (opts.format == "json")
        std::cout << as_json.dump(2) << "\n";
    else if (opts.format == "csv")
        print_csv(header, rows);
    else
        print_table(header, rows);
}

json partition_to_json(const Partition& p) {
    return json(p.parts());
}

long long to_ll(const Int& v) {
    return v.convert_to<long long>();
}

// --- search ---------------------------------------------------------------

int run_search(const GlobalOptions& opts, int m) {
    ManifestScope manifest(opts, "search", {{"m", m}, {"max_m", opts.max_m}, {"jobs", opts.jobs}});
    SearchOptions sopts;
    sopts.max_m = opts.max_m;
    sopts.jobs = opts.jobs;
    const auto rows = search(m, sopts);
    manifest.set_rows(rows.size());

    std::vector<std::vector<std::string>> table;
    json jrows = json::array();
    for (const auto& row : rows) {
        table.push_back({row.partition.str(), std::to_string(to_ll(row.n)),
                         row.m6_caveat ? "yes" : "no"});
        jrows.push_back({{"partition", partition_to_json(row.partition)},
                         {"n", to_ll(row.n)},
                         {"cond_mod8_x", row.cond_mod8_x},
                         {"cond_mod8_xy", row.cond_mod8_xy},
                         {"cond_M_positive", row.cond_M_positive},
                         {"faithful", row.faithful},
                         {"admissible", row.admissible},
                         {"m6_caveat", row.m6_caveat}});
    }
    emit(opts, {"partition", "n", "m6_caveat"}, table, json{{"m", m}, {"rows", jrows}});
    return 0;
}

// --- char -----------------------------------------------------------------

int run_char(const GlobalOptions& opts, const std::string& lambda_text,
             const std::string& mu_text) {
    ManifestScope manifest(opts, "char", {{"lambda", lambda_text}, {"mu", mu_text}});
    CharacterEngine eng;
    const Partition lambda = parse_partition(lambda_text);
    const CycleType mu(parse_partition(mu_text));
    const Int value = eng.character(lambda, mu);
    manifest.set_rows(1);
    if (opts.format == "json") {
        std::cout << json{{"lambda", partition_to_json(lambda)},
                          {"mu", partition_to_json(mu.partition())},
                          {"value", value.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

// --- ade ------------------------------------------------------------------

int run_ade_classes(const GlobalOptions& opts, const std::string& label) {
    ManifestScope manifest(opts, "ade classes", {{"group", label}});
    const FiniteQuatGroup g = ade_group(label);
    const auto classes = conjugacy_classes(g);
    manifest.set_rows(classes.size());

    std::vector<std::vector<std::string>> table;
    json jrows = json::array();
    for (const auto& cls : classes) {
        table.push_back({cls.representative.str(), std::to_string(cls.size),
                         cls.real_part.str()});
        jrows.push_back({{"representative", cls.representative.str()},
                         {"size", cls.size},
                         {"real_part", cls.real_part.str()}});
    }
    emit(opts, {"representative", "size", "real_part"}, table,
         json{{"group", label}, {"order", g.order()}, {"classes", jrows}});
    return 0;
}

int run_ade_action(const GlobalOptions& opts, const std::string& label) {
    ManifestScope manifest(opts, "ade action", {{"group", label}});
    const FiniteQuatGroup g = ade_group(label);
    const auto rows = class_action(g);
    manifest.set_rows(rows.size());

    std::vector<std::vector<std::string>> table;
    json jrows = json::array();
    for (const auto& row : rows) {
        table.push_back({row.representative.str(), std::to_string(row.class_size),
                         row.real_part.str(), row.image_real_part.str(),
                         std::to_string(row.image_class_index)});
        jrows.push_back({{"representative", row.representative.str()},
                         {"size", row.class_size},
                         {"real_part", row.real_part.str()},
                         {"image_real_part", row.image_real_part.str()},
                         {"image_class", row.image_class_index}});
    }
    emit(opts, {"representative", "size", "real_part", "image_real_part", "image_class"}, table,
         json{{"group", label}, {"rows", jrows}});
    return 0;
}

int run_ade_bd4(const GlobalOptions& opts) {
    ManifestScope manifest(opts, "ade bd4", json::object());
    const auto rows = bo_action_on_bd4();
    manifest.set_rows(rows.size());

    std::vector<std::vector<std::string>> table;
    json jrows = json::array();
    for (const auto& row : rows) {
        table.push_back({row.coset_representative.str(), row.image_i.str(), row.image_j.str(),
                         row.image_k.str()});
        jrows.push_back({{"coset", row.coset_representative.str()},
                         {"i", row.image_i.str()},
                         {"j", row.image_j.str()},
                         {"k", row.image_k.str()}});
    }
    emit(opts, {"coset", "i ->", "j ->", "k ->"}, table, json{{"rows", jrows}});
    return 0;
}

// --- goursat ----------------------------------------------------------------

std::string slurp_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open file " + arg.substr(1));
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return arg;
}

FiniteQuatGroup group_from_json(const json& j) {
    if (j.is_string()) return ade_group(j.get<std::string>());
    if (j.is_object() && j.contains("ade")) return ade_group(j["ade"].get<std::string>());
    std::set<UnitQuaternion> elements;
    for (const auto& q : j) elements.insert(parse_quaternion(q.get<std::string>()));
    return FiniteQuatGroup::from_elements(elements);
}

GoursatQuintuple quintuple_from_json(const json& j) {
    GoursatQuintuple q;
    q.A = group_from_json(j.at("A"));
    q.A0 = group_from_json(j.at("A0"));
    q.B = group_from_json(j.at("B"));
    q.B0 = group_from_json(j.at("B0"));
    for (const auto& pair : j.at("theta")) {
        const UnitQuaternion from =
            coset_representative(parse_quaternion(pair.at(0).get<std::string>()), q.A0);
        const UnitQuaternion to =
            coset_representative(parse_quaternion(pair.at(1).get<std::string>()), q.B0);
        q.theta[from] = to;
    }
    return q;
}

std::vector<QuatPair> pairs_from_json(const json& j) {
    if (j.is_object() && j.contains("fixture")) {
        const std::string name = j["fixture"].get<std::string>();
        if (name == "z3_2t_first") {
            const auto pair = fiber_pair_z3_2t();
            return {pair.first.elements().begin(), pair.first.elements().end()};
        }
        if (name == "z3_2t_second") {
            const auto pair = fiber_pair_z3_2t();
            return {pair.second.elements().begin(), pair.second.elements().end()};
        }
        if (name == "z4_2d6_misaligned") return contrast_pair_z4_2d6().first;
        if (name == "z4_2d6_fiber") {
            const auto fiber = contrast_pair_z4_2d6().second;
            return {fiber.elements().begin(), fiber.elements().end()};
        }
        throw std::invalid_argument("unknown fixture '" + name + "'");
    }
    const json& array = j.is_object() && j.contains("elements") ? j["elements"] : j;
    std::vector<QuatPair> out;
    for (const auto& pair : array)
        out.push_back({parse_quaternion(pair.at(0).get<std::string>()),
                       parse_quaternion(pair.at(1).get<std::string>())});
    return out;
}

int run_goursat_build(const GlobalOptions& opts, const std::string& quintuple_arg) {
    ManifestScope manifest(opts, "goursat build", {{"quintuple", quintuple_arg}});
    const GoursatQuintuple q = quintuple_from_json(json::parse(slurp_arg(quintuple_arg)));
    const Spin4Subgroup c = build_subgroup(q);
    manifest.set_rows(c.order());

    std::vector<std::vector<std::string>> table;
    json jelems = json::array();
    for (const QuatPair& p : c.elements()) {
        table.push_back({p.a.str(), p.b.str()});
        jelems.push_back(json::array({p.a.str(), p.b.str()}));
    }
    emit(opts, {"a", "b"}, table, json{{"order", c.order()}, {"elements", jelems}});
    return 0;
}

int run_goursat_compare(const GlobalOptions& opts, const std::string& lhs_arg,
                        const std::string& rhs_arg) {
    ManifestScope manifest(opts, "goursat compare", {{"lhs", lhs_arg}, {"rhs", rhs_arg}});
    const std::vector<QuatPair> lhs = pairs_from_json(json::parse(slurp_arg(lhs_arg)));
    const std::vector<QuatPair> rhs = pairs_from_json(json::parse(slurp_arg(rhs_arg)));
    const bool almost = spin4_almost_conjugate(lhs, rhs);

    // Witness scan over {1} x 2O and the diagonal of 2O.
    const FiniteQuatGroup bo = ade_group("2O");
    std::vector<QuatPair> witnesses;
    for (const UnitQuaternion& w : bo.elements()) witnesses.push_back({UnitQuaternion::one(), w});
    for (const UnitQuaternion& w : bo.elements()) witnesses.push_back({w, w});
    const auto witness = conjugate_by_witness(lhs, rhs, witnesses);
    manifest.set_rows(1);

    const json out{{"order_lhs", lhs.size()},
                   {"order_rhs", rhs.size()},
                   {"almost_conjugate", almost},
                   {"conjugating_witness", witness ? json(witness->str()) : json(nullptr)}};
    if (opts.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "almost conjugate: " << (almost ? "yes" : "no") << "\n";
        std::cout << "conjugating witness: " << (witness ? witness->str() : "none found")
                  << "\n";
    }
    return 0;
}

// --- codes ------------------------------------------------------------------

int run_codes_verify(const GlobalOptions& opts) {
    ManifestScope manifest(opts, "codes verify", json::object());
    const auto pair = so6_counterexample_pair();
    const SignCodeGroup& g1 = pair.first;
    const SignCodeGroup& g2 = pair.second;
    const bool almost = so6_almost_conjugate(g1, g2);
    const auto witness = permutation_equivalent(g1, g2);
    manifest.set_rows(g1.order() + g2.order());

    auto words = [](const SignCodeGroup& g) {
        json out = json::array();
        for (const SignVector& v : g.codewords()) out.push_back(v.str());
        return out;
    };
    auto enumerator = [](const SignCodeGroup& g) {
        json out = json::object();
        for (auto [w, c] : g.weight_enumerator()) out[std::to_string(w)] = c;
        return out;
    };
    const json out{{"group1", words(g1)},
                   {"group2", words(g2)},
                   {"weight_enumerator1", enumerator(g1)},
                   {"weight_enumerator2", enumerator(g2)},
                   {"almost_conjugate", almost},
                   {"permutation_equivalent", witness.has_value()},
                   {"permutations_tried", 720}};
    if (opts.format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "group 1:";
    for (const SignVector& v : g1.codewords()) std::cout << " " << v.str();
    std::cout << "\ngroup 2:";
    for (const SignVector& v : g2.codewords()) std::cout << " " << v.str();
    std::cout << "\nweight enumerator (both): ";
    for (auto [w, c] : g1.weight_enumerator()) std::cout << w << ":" << c << " ";
    std::cout << "\nalmost conjugate in SO(6): " << (almost ? "yes" : "no") << "\n";
    std::cout << "permutation equivalent: " << (witness ? "yes" : "no")
              << " (all 720 permutations tried)\n";
    return 0;
}

// --- volume -----------------------------------------------------------------

int run_volume(const GlobalOptions& opts, const std::string& space, bool table_mode,
               const std::string& kappa_text, const std::string& display) {
    ManifestScope manifest(opts, "volume",
                           {{"space", space}, {"table", table_mode}, {"kappa", kappa_text}});
    const bool sqrt_denom = display == "sqrt-denominator";
    auto render = [&](const SymVolume& v) {
        return sqrt_denom ? v.str_sqrt_denominator() : v.str();
    };
    if (table_mode) {
        std::vector<std::vector<std::string>> table;
        json jrows = json::array();
        const bool rescale = !kappa_text.empty();
        Rational kappa = 1;
        if (rescale) {
            const SymReal k = parse_symreal(kappa_text);
            if (!k.is_rational() || k.q() <= 0)
                throw std::invalid_argument("kappa must be a positive rational");
            kappa = k.q();
        }
        for (const auto& entry : golden::volume_table_entries()) {
            SymVolume base = parse_symvolume(entry.volume);
            std::string note = "x (30/kappa)^3";
            if (rescale) {
                base = base.rescale_metric(Rational(30) / kappa, 6);
                note = "at kappa = " + render_rational(kappa);
            }
            if (entry.space == "S3xS3")
                note += "; explicit computation gives " +
                        (sqrt_denom ? std::string("32/81*pi^4/sqrt(3)")
                                    : std::string("32/243*pi^4*sqrt(3)")) +
                        " for the base metric";
            table.push_back({entry.space, render(base), note});
            jrows.push_back({{"space", entry.space}, {"volume", render(base)}, {"note", note}});
        }
        manifest.set_rows(table.size());
        emit(opts, {"space", "volume", "note"}, table, json{{"rows", jrows}});
        return 0;
    }

    SymVolume vol;
    std::string note;
    if (space == "F12") {
        vol = vol_flag_quotient(groups::su3());
    } else if (space == "SU3") {
        vol = vol_group(groups::su3());
    } else if (space == "Sp2") {
        vol = vol_group(groups::sp2());
    } else if (space == "U1xSp1") {
        vol = vol_group(groups::u1_sp1());
    } else if (space == "CP3") {
        vol = vol_homogeneous(groups::sp2(), groups::u1_sp1());
    } else if (space == "SU2") {
        vol = vol_group(groups::su2_factor());
    } else if (space == "SU2cubed") {
        vol = vol_group(groups::su2_cubed());
    } else if (space == "DiagSU2") {
        vol = vol_group(groups::diag_su2());
    } else if (space == "S3xS3") {
        vol = vol_homogeneous(groups::su2_cubed(), groups::diag_su2());
    } else if (space == "S6") {
        vol = parse_symvolume("16/15*pi^3");
        note = "transcribed table entry; not derived from root data";
    } else {
        throw std::invalid_argument("unknown space '" + space + "'");
    }
    manifest.set_rows(1);
    if (opts.format == "json") {
        json out{{"space", space},
                 {"volume", render(vol)},
                 {"q", render_rational(vol.radical().q())},
                 {"d", vol.radical().d().str()},
                 {"pi_exponent", vol.pi_exponent()}};
        if (!note.empty()) out["note"] = note;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render(vol) << (note.empty() ? "" : "  [" + note + "]") << "\n";
    }
    return 0;
}

// --- paper-tables -----------------------------------------------------------

int run_paper_tables(const GlobalOptions& opts) {
    ManifestScope manifest(opts, "paper-tables", json::object());
    int failures = 0;
    size_t checks = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "ok      " : "MISMATCH") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    };

    // Partition table: every published row is admissible with the printed
    // dimension.
    {
        CharacterEngine eng;
        for (const auto& row : golden::partition_table()) {
            const Partition lambda(row.partition);
            const AdmissibilityReport rep = admissibility(eng, lambda);
            report("admissible " + lambda.str() + " n=" + std::to_string(row.n),
                   rep.admissible && rep.n == row.n);
        }
        // Full scans reproduce the published rows as subsets; the scans also
        // find further rows satisfying every stated condition.
        for (int m : {6, 8, 10, 11, 12}) {
            const auto rows = search(m);
            size_t published = 0;
            bool all_found = true;
            for (const auto& row : golden::partition_table()) {
                if (row.m != m) continue;
                ++published;
                const bool found =
                    std::any_of(rows.begin(), rows.end(), [&](const AdmissibilityReport& r) {
                        return r.partition == Partition(row.partition) && r.n == row.n;
                    });
                all_found = all_found && found;
            }
            report("search m=" + std::to_string(m) + " covers the published rows", all_found,
                   std::to_string(rows.size()) + " admissible rows, " +
                       std::to_string(published) + " published");
        }
    }

    // ADE class data.
    {
        auto check_classes = [&](const std::string& label,
                                 const std::vector<golden::ClassRow>& expected) {
            const auto classes = conjugacy_classes(ade_group(label));
            bool ok = classes.size() == expected.size();
            for (size_t i = 0; ok && i < classes.size(); ++i)
                ok = classes[i].real_part.str() == expected[i].real_part &&
                     classes[i].size == expected[i].size;
            report("conjugacy classes of " + label, ok);
        };
        check_classes("2O", golden::classes_2o());
        check_classes("2I", golden::classes_2i());

        auto check_action = [&](const std::string& label,
                                const std::vector<golden::ActionRow>& expected) {
            const FiniteQuatGroup g = ade_group(label);
            const auto classes = conjugacy_classes(g);
            const auto rows = class_action(g);
            bool ok = true;
            for (const auto& want : expected) {
                bool row_ok = false;
                for (const auto& row : rows) {
                    if (row.real_part.str() != want.real_part || row.class_size != want.size)
                        continue;
                    const auto& image = classes[row.image_class_index];
                    row_ok = image.real_part.str() == want.image_real_part &&
                             image.size == want.image_size;
                    break;
                }
                ok = ok && row_ok;
            }
            report("outer involution class action on " + label, ok);
        };
        check_action("2O", golden::action_2o());
        check_action("2I", golden::action_2i());

        const auto rows = bo_action_on_bd4();
        bool ok = rows.size() == 24;
        std::map<UnitQuaternion, std::array<std::string, 3>> got;
        for (const auto& row : rows)
            got[row.coset_representative] = {row.image_i.str(), row.image_j.str(),
                                             row.image_k.str()};
        for (const auto& want : golden::bd4_table()) {
            const UnitQuaternion q = parse_quaternion(want.coset);
            const auto it = got.find(std::min(q, -q));
            ok = ok && it != got.end() && it->second[0] == want.image_i &&
                 it->second[1] == want.image_j && it->second[2] == want.image_k;
        }
        report("action of 2O/{+-1} on the imaginary units (24 rows)", ok);
    }

    // Sign codes.
    {
        const auto pair = so6_counterexample_pair();
        std::map<int, int> expected;
        for (auto [w, c] : golden::code_weight_enumerator()) expected[w] = c;
        report("sign code weight enumerators",
               pair.first.weight_enumerator() == expected &&
                   pair.second.weight_enumerator() == expected);
        report("sign codes almost conjugate in SO(6)",
               so6_almost_conjugate(pair.first, pair.second));
        report("sign codes not permutation equivalent (720 tried)",
               !permutation_equivalent(pair.first, pair.second).has_value());
    }

    // Volumes and Gaussian pins.
    {
        report("gaussian pin su(3) = 12",
               gaussian_eval(delta_poly(groups::su3()), laplace_op(groups::su3())) ==
                   golden::gaussian_pin_su3());
        report("gaussian pin sp(2) = 192",
               gaussian_eval(delta_poly(groups::sp2()), laplace_op(groups::sp2())) ==
                   golden::gaussian_pin_sp2());
        for (const auto& pin : golden::volume_pins()) {
            SymVolume vol;
            if (pin.space == "F12") vol = vol_flag_quotient(groups::su3());
            else if (pin.space == "Sp2") vol = vol_group(groups::sp2());
            else if (pin.space == "U1xSp1") vol = vol_group(groups::u1_sp1());
            else if (pin.space == "CP3") vol = vol_homogeneous(groups::sp2(), groups::u1_sp1());
            else if (pin.space == "DiagSU2") vol = vol_group(groups::diag_su2());
            else if (pin.space == "SU2") vol = vol_group(groups::su2_factor());
            else if (pin.space == "SU2cubed") vol = vol_group(groups::su2_cubed());
            else if (pin.space == "S3xS3")
                vol = vol_homogeneous(groups::su2_cubed(), groups::diag_su2());
            report("volume pin " + pin.space + " = " + pin.volume, vol.str() == pin.volume);
        }
    }

    // Spin(4) pairs.
    {
        const auto pair = fiber_pair_z3_2t();
        report("Z3/2T fiber pair almost conjugate",
               spin4_almost_conjugate(pair.first, pair.second));
        const FiniteQuatGroup bo = ade_group("2O");
        std::vector<QuatPair> witnesses;
        for (const UnitQuaternion& w : bo.elements())
            witnesses.push_back({UnitQuaternion::one(), w});
        report("Z3/2T conjugating witness in {1} x 2O",
               conjugate_by_witness(pair.first, pair.second, witnesses).has_value());
        const auto contrast = contrast_pair_z4_2d6();
        report("Z4/2D6 contrast pair not almost conjugate",
               !spin4_almost_conjugate(
                   contrast.first, std::vector<QuatPair>(contrast.second.elements().begin(),
                                                         contrast.second.elements().end())));
    }

    manifest.set_rows(checks);
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " mismatches")
              << " (" << checks << " checks)\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact isospectrality toolkit: character scans, binary polyhedral groups, "
                 "Goursat fiber products, sign codes, and Weyl-integration volumes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "worker threads for partition sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-m", opts.max_m, "cap for the symmetric group degree")
        ->check(CLI::PositiveNumber);
    app.add_flag("--manifest", opts.manifest, "emit a run manifest on stderr");

    auto* search_cmd = app.add_subcommand("search", "scan Sym(m) irreps for admissible rows");
    search_cmd->fallthrough();
    int search_m = 8;
    search_cmd->add_option("--m", search_m, "degree of the symmetric group")->required();

    auto* char_cmd = app.add_subcommand("char", "evaluate one irreducible character");
    char_cmd->fallthrough();
    std::string lambda_text, mu_text;
    char_cmd->add_option("--lambda", lambda_text, "irrep label, e.g. 3,2,1")->required();
    char_cmd->add_option("--mu", mu_text, "cycle type, e.g. 1,1,1,1,1,1")->required();

    auto* ade_cmd = app.add_subcommand("ade", "finite subgroups of the unit quaternions");
    ade_cmd->fallthrough();
    ade_cmd->require_subcommand(1);
    auto* ade_classes_cmd = ade_cmd->add_subcommand("classes", "conjugacy class table");
    ade_classes_cmd->fallthrough();
    std::string ade_label = "2O";
    ade_classes_cmd->add_option("--group", ade_label, "ADE label, e.g. 2I")->required();
    auto* ade_action_cmd =
        ade_cmd->add_subcommand("action", "canonical outer involution on classes");
    ade_action_cmd->fallthrough();
    std::string action_label = "2O";
    ade_action_cmd->add_option("--group", action_label, "2O or 2I")->required();
    auto* ade_bd4_cmd =
        ade_cmd->add_subcommand("bd4", "action of 2O/{+-1} on the imaginary units");
    ade_bd4_cmd->fallthrough();

    auto* goursat_cmd = app.add_subcommand("goursat", "subgroups of SU(2) x SU(2)");
    goursat_cmd->fallthrough();
    goursat_cmd->require_subcommand(1);
    auto* goursat_build_cmd =
        goursat_cmd->add_subcommand("build", "fiber product of a quintuple");
    goursat_build_cmd->fallthrough();
    std::string quintuple_arg;
    goursat_build_cmd->add_option("--quintuple", quintuple_arg, "JSON or @file")->required();
    auto* goursat_compare_cmd =
        goursat_cmd->add_subcommand("compare", "almost conjugacy of two element sets");
    goursat_compare_cmd->fallthrough();
    std::string lhs_arg, rhs_arg;
    goursat_compare_cmd->add_option("--lhs", lhs_arg, "JSON, @file, or {\"fixture\": name}")
        ->required();
    goursat_compare_cmd->add_option("--rhs", rhs_arg, "JSON, @file, or {\"fixture\": name}")
        ->required();

    auto* codes_cmd = app.add_subcommand("codes", "diagonal sign codes in SO(6)");
    codes_cmd->fallthrough();
    codes_cmd->require_subcommand(1);
    auto* codes_verify_cmd =
        codes_cmd->add_subcommand("verify", "print the counterexample pair and its invariants");
    codes_verify_cmd->fallthrough();

    auto* volume_cmd = app.add_subcommand("volume", "exact volumes of the shipped spaces");
    volume_cmd->fallthrough();
    std::string space;
    bool volume_table = false;
    std::string kappa_text;
    volume_cmd->add_option("--space", space,
                           "one of S6, CP3, S3xS3, F12, SU3, Sp2, SU2cubed "
                           "(also SU2, U1xSp1, DiagSU2)");
    volume_cmd->add_flag("--table", volume_table, "print the six-manifold base-volume table");
    volume_cmd->add_option("--kappa", kappa_text,
                           "scalar curvature: rescales table entries by (30/kappa)^3");
    std::string volume_display = "canonical";
    volume_cmd->add_option("--display", volume_display, "volume rendering")
        ->check(CLI::IsMember({"canonical", "sqrt-denominator"}))
        ->capture_default_str();

    auto* tables_cmd =
        app.add_subcommand("paper-tables", "re-run every pinned computation against the goldens");
    tables_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (search_cmd->parsed()) return run_search(opts, search_m);
        if (char_cmd->parsed()) return run_char(opts, lambda_text, mu_text);
        if (ade_cmd->parsed()) {
            if (ade_classes_cmd->parsed()) return run_ade_classes(opts, ade_label);
            if (ade_action_cmd->parsed()) return run_ade_action(opts, action_label);
            if (ade_bd4_cmd->parsed()) return run_ade_bd4(opts);
        }
        if (goursat_cmd->parsed()) {
            if (goursat_build_cmd->parsed()) return run_goursat_build(opts, quintuple_arg);
            if (goursat_compare_cmd->parsed()) return run_goursat_compare(opts, lhs_arg, rhs_arg);
        }
        if (codes_cmd->parsed() && codes_verify_cmd->parsed()) return run_codes_verify(opts);
        if (volume_cmd->parsed()) {
            if (!volume_table && space.empty())
                throw std::invalid_argument("volume: pass --space or --table");
            return run_volume(opts, space, volume_table, kappa_text, volume_display);
        }
        if (tables_cmd->parsed()) return run_paper_tables(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
