#include <univ/cli.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <univ/chern.hpp>
#include <univ/chern_expr.hpp>
#include <univ/inclexcl.hpp>
#include <univ/modular.hpp>
#include <univ/nodal.hpp>
#include <univ/qseries.hpp>

namespace univ::cli
{

namespace
{

Json series_json(const Series<Rational> &s)
{
    Json out = Json::array();
    for (const auto &c : s.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

Json polynomial_json(const ChernExpr &p)
{
    Json terms = Json::object();
    for (const auto &[e, c] : p.terms()) {
        terms[std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
              std::to_string(e[3])] = c.str();
    }
    return terms;
}

Json surface_json(const chern::SurfaceClass &s)
{
    return Json{{"name", s.name}, {"L2", s.L2}, {"LK", s.LK}, {"K2", s.K2}, {"c2", s.c2}};
}

std::vector<std::vector<std::string>> series_table(const Series<Rational> &s)
{
    std::vector<std::vector<std::string>> rows{{"k", "coefficient"}};
    for (std::size_t k = 0; k <= s.order(); ++k) {
        rows.push_back({std::to_string(k), s[k].str()});
    }
    return rows;
}

std::string csv_field(const std::string &field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

OutputDocument document(std::string command)
{
    OutputDocument doc;
    doc.command = std::move(command);
    return doc;
}

} // namespace

Json OutputDocument::to_json() const
{
    Json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    if (order) {
        doc["order"] = *order;
    }
    doc["payload"] = payload;
    return doc;
}

std::string OutputDocument::render(Format format) const
{
    if (format == Format::json) {
        return to_json().dump(2) + "\n";
    }
    if (table.empty()) {
        throw std::invalid_argument("command '" + command + "' has no tabular output; use --format json");
    }
    std::string out;
    for (const auto &row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

OutputDocument cmd_node_polys(std::size_t max_delta)
{
    const auto table = nodal::node_polynomials(max_delta);
    auto doc = document("node-polys");
    doc.parameters["max_delta"] = max_delta;
    doc.order = max_delta;
    doc.payload["variables"] = Json::array({"L2", "LK", "K2", "c2"});
    Json polys = Json::array();
    doc.table = {{"delta", "L2", "LK", "K2", "c2", "coefficient"}};
    for (std::size_t delta = 0; delta <= max_delta; ++delta) {
        const auto &p = table[delta];
        polys.push_back({{"delta", delta}, {"text", p.str()}, {"terms", polynomial_json(p)}});
        for (const auto &[e, c] : p.terms()) {
            doc.table.push_back({std::to_string(delta), std::to_string(e[0]), std::to_string(e[1]),
                                 std::to_string(e[2]), std::to_string(e[3]), c.str()});
        }
    }
    doc.payload["polynomials"] = std::move(polys);
    return doc;
}

OutputDocument cmd_count(const std::string &surface_spec, std::size_t delta)
{
    const auto surface = chern::parse_surface(surface_spec);
    const auto count = nodal::count_nodal(surface, delta);
    auto doc = document("count");
    doc.parameters = {{"surface", surface_spec}, {"delta", delta}};
    doc.payload = {
        {"surface", surface_json(surface)},
        {"delta", delta},
        {"count", count.value.str()},
        {"validity", nodal::to_string(count.validity)},
        {"chi_L", chern::chi_L(surface)},
        {"dim_linear_system", chern::dim_linear_system(surface)},
    };
    doc.table = {{"surface", "delta", "count", "validity", "chi_L", "dim_linear_system"},
                 {surface.name, std::to_string(delta), count.value.str(), nodal::to_string(count.validity),
                  std::to_string(chern::chi_L(surface)), std::to_string(chern::dim_linear_system(surface))}};
    return doc;
}

OutputDocument cmd_yau_zaslow(std::size_t max_delta)
{
    const auto report = nodal::yau_zaslow_check(max_delta);
    auto doc = document("yau-zaslow");
    doc.parameters["max_delta"] = max_delta;
    doc.order = max_delta;
    Json rows = Json::array();
    doc.table = {{"delta", "L2", "node_polynomial", "partition_coefficient", "equal"}};
    for (const auto &r : report.rows) {
        const auto L2 = 2 * static_cast<std::int64_t>(r.delta) - 2;
        rows.push_back({{"delta", r.delta},
                        {"L2", L2},
                        {"node_polynomial", r.node_polynomial_value.str()},
                        {"partition_coefficient", r.partition_coefficient.str()},
                        {"equal", r.equal()}});
        doc.table.push_back({std::to_string(r.delta), std::to_string(L2), r.node_polynomial_value.str(),
                             r.partition_coefficient.str(), r.equal() ? "true" : "false"});
    }
    doc.payload["rows"] = std::move(rows);
    doc.payload["all_equal"] = report.all_equal();
    doc.mismatch = !report.all_equal();
    return doc;
}

OutputDocument cmd_blowup_check(const std::string &surface_spec)
{
    const auto surface = chern::parse_surface(surface_spec);
    const auto report = nodal::blowup_identity_check(surface);
    auto doc = document("blowup-check");
    doc.parameters["surface"] = surface_spec;
    doc.order = report.lhs.order();
    doc.payload = {
        {"surface", surface_json(report.surface)},
        {"blown_up", surface_json(report.blown_up)},
        {"lhs", series_json(report.lhs)},
        {"rhs", series_json(report.rhs)},
        {"holds", report.holds()},
    };
    doc.mismatch = !report.holds();
    return doc;
}

OutputDocument cmd_rr_solve()
{
    const auto catalog = chern::identification_catalog();
    const auto coefficients = chern::solve_rr_coefficients(catalog);
    auto doc = document("rr-solve");
    Json entries = Json::array();
    for (const auto &e : catalog) {
        entries.push_back({{"surface", surface_json(e.surface)}, {"chi", e.chi.str()}});
    }
    doc.payload["catalog"] = std::move(entries);
    doc.payload["coefficients"] = {{"A1", coefficients.A1.str()},
                                   {"A2", coefficients.A2.str()},
                                   {"A3", coefficients.A3.str()},
                                   {"A4", coefficients.A4.str()}};

    Json checks = Json::array();
    bool all_match = true;
    for (const auto &s : chern::catalog_sample()) {
        const auto known = chern::known_euler_characteristic(s);
        if (!known) {
            continue;
        }
        const auto predicted = chern::evaluate(coefficients, s);
        all_match = all_match && predicted == *known;
        checks.push_back({{"surface", s.name},
                          {"predicted", predicted.str()},
                          {"known", known->str()},
                          {"equal", predicted == *known}});
    }
    doc.payload["cross_validation"] = std::move(checks);
    doc.payload["all_equal"] = all_match;
    doc.table = {{"coefficient", "value"},
                 {"A1", coefficients.A1.str()},
                 {"A2", coefficients.A2.str()},
                 {"A3", coefficients.A3.str()},
                 {"A4", coefficients.A4.str()}};
    doc.mismatch = !all_match;
    return doc;
}

OutputDocument cmd_factorize(std::size_t max_delta)
{
    auto doc = document("factorize");
    doc.parameters["max_delta"] = max_delta;
    doc.order = max_delta;
    nodal::FactorizedLogs logs;
    try {
        logs = nodal::factorize_generating_function(max_delta);
    } catch (const nodal::NotFactorizable &e) {
        doc.payload["factorizable"] = false;
        doc.payload["error"] = e.what();
        doc.mismatch = true;
        return doc;
    }
    const bool round_trip = logs.reassemble() == nodal::node_polynomials(max_delta).generating_function();
    doc.payload["factorizable"] = true;
    doc.payload["log_A1"] = series_json(logs.log_A1);
    doc.payload["log_A2"] = series_json(logs.log_A2);
    doc.payload["log_A3"] = series_json(logs.log_A3);
    doc.payload["log_A4"] = series_json(logs.log_A4);
    doc.payload["attached_to"] = {{"log_A1", "K2"}, {"log_A2", "c2"}, {"log_A3", "L2"}, {"log_A4", "LK"}};
    doc.payload["reassembly_matches"] = round_trip;
    doc.table = {{"k", "log_A1", "log_A2", "log_A3", "log_A4"}};
    for (std::size_t k = 0; k <= max_delta; ++k) {
        doc.table.push_back(
            {std::to_string(k), logs.log_A1[k].str(), logs.log_A2[k].str(), logs.log_A3[k].str(), logs.log_A4[k].str()});
    }
    doc.mismatch = !round_trip;
    return doc;
}

OutputDocument cmd_inclexcl(const std::string &input, std::size_t max_sets)
{
    Json parsed;
    try {
        parsed = Json::parse(input);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument(std::string("inclexcl: invalid JSON input: ") + e.what());
    }
    if (!parsed.is_array()) {
        throw std::invalid_argument("inclexcl: input must be a JSON array of integer arrays");
    }
    std::vector<std::vector<std::int64_t>> raw;
    for (const auto &set : parsed) {
        if (!set.is_array()) {
            throw std::invalid_argument("inclexcl: input must be a JSON array of integer arrays");
        }
        auto &elements = raw.emplace_back();
        for (const auto &x : set) {
            if (!x.is_number_integer()) {
                throw std::invalid_argument("inclexcl: set elements must be integers");
            }
            elements.push_back(x.get<std::int64_t>());
        }
    }
    const inclexcl::SetSystem sys(std::move(raw), max_sets);
    const auto intersections = inclexcl::intersection_table(sys);
    const auto table = inclexcl::modified_cardinalities(sys);

    inclexcl::ElementSet all;
    for (const auto &s : sys.sets) {
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const auto direct = static_cast<std::int64_t>(all.size());
    const auto via_modified = inclexcl::union_via_modified(sys);
    const auto via_alternating = inclexcl::union_via_alternating(sys);

    auto doc = document("inclexcl");
    doc.parameters["max_sets"] = max_sets;
    Json sets = Json::array();
    for (const auto &s : sys.sets) {
        sets.push_back(s);
    }
    doc.payload["sets"] = std::move(sets);
    Json rows = Json::array();
    doc.table = {{"index_set", "plain", "modified"}};
    for (const auto &[mask, c] : table) {
        const auto idx = inclexcl::indices_of(mask);
        rows.push_back({{"index_set", idx},
                        {"intersection", intersections.at(mask)},
                        {"plain", c.plain},
                        {"modified", c.modified}});
        std::string label;
        for (auto i : idx) {
            label += (label.empty() ? "" : " ") + std::to_string(i);
        }
        doc.table.push_back({label, std::to_string(c.plain), std::to_string(c.modified)});
    }
    doc.payload["table"] = std::move(rows);
    doc.payload["union_size"] = direct;
    doc.payload["union_via_modified"] = via_modified;
    doc.payload["union_via_alternating"] = via_alternating;
    const bool consistent = via_modified == direct && via_alternating == direct;
    doc.payload["consistent"] = consistent;
    doc.mismatch = !consistent;
    return doc;
}

OutputDocument cmd_series(const std::string &name, std::size_t order, std::int64_t power)
{
    Series<Rational> s;
    if (name == "G2") {
        s = modular::g2_series(order);
    } else if (name == "DG2") {
        s = modular::dg2_series(order);
    } else if (name == "D2G2") {
        s = modular::d2g2_series(order);
    } else if (name == "DELTA") {
        s = modular::delta_series(order);
    } else if (name == "PARTITION") {
        s = modular::partition_power_series(power, order);
    } else if (name == "B1") {
        s = nodal::b1_series(order);
    } else if (name == "B2") {
        s = nodal::b2_series(order);
    } else {
        throw std::invalid_argument("series: unknown name '" + name + "' (expected G2, DG2, D2G2, DELTA, PARTITION, B1, B2)");
    }
    auto doc = document("series");
    doc.parameters["name"] = name;
    if (name == "PARTITION") {
        doc.parameters["power"] = power;
    }
    doc.order = order;
    doc.payload["coefficients"] = series_json(s);
    doc.table = series_table(s);
    return doc;
}

int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Node polynomials, Riemann-Roch data and generating-function identities in exact arithmetic", "univ"};
    app.require_subcommand(1);

    std::string format_name = "json";
    const auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    std::size_t max_delta = nodal::max_supported_order;
    std::size_t delta = 0;
    std::size_t order = nodal::max_supported_order;
    std::int64_t power = 24;
    std::size_t max_sets = inclexcl::default_max_sets;
    std::string surface;
    std::string name;
    std::string input_path;

    auto *node_polys = app.add_subcommand("node-polys", "Universal node polynomials T_0..T_max-delta");
    node_polys->add_option("--max-delta", max_delta, "Largest delta (at most 5)");
    add_format(node_polys);

    auto *count = app.add_subcommand("count", "Evaluate T_delta on a surface");
    count->add_option("--surface", surface, "P2:d, K3:L2, T4:L2 or L2,LK,K2,c2")->required();
    count->add_option("--delta", delta, "Number of nodes (at most 5)")->required();
    add_format(count);

    auto *yz = app.add_subcommand("yau-zaslow", "Compare T_delta on K3 with prod (1-q^k)^-24");
    yz->add_option("--max-delta", max_delta, "Largest delta (at most 5)");
    add_format(yz);

    auto *blow = app.add_subcommand("blowup-check", "Verify the one-point blowup identity to order 5");
    blow->add_option("--surface", surface, "P2:d, K3:L2, T4:L2 or L2,LK,K2,c2")->required();
    add_format(blow);

    auto *rr = app.add_subcommand("rr-solve", "Recover the Riemann-Roch coefficients A1..A4");
    add_format(rr);

    auto *fac = app.add_subcommand("factorize", "Split log F into the four Chern-number series");
    fac->add_option("--max-delta", max_delta, "Largest delta (at most 5)");
    add_format(fac);

    auto *ie = app.add_subcommand("inclexcl", "Modified cardinalities of a set system (JSON array of arrays)");
    ie->add_option("--input", input_path, "Read the set system from a file instead of stdin");
    ie->add_option("--max-sets", max_sets, "Bound on the number of sets");
    add_format(ie);

    auto *series = app.add_subcommand("series", "Print a q-expansion");
    series->add_option("--name", name, "G2, DG2, D2G2, DELTA, PARTITION, B1 or B2")->required();
    series->add_option("--order", order, "Truncation order");
    series->add_option("--power", power, "Exponent e for PARTITION");
    add_format(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        OutputDocument doc;
        if (node_polys->parsed()) {
            doc = cmd_node_polys(max_delta);
        } else if (count->parsed()) {
            doc = cmd_count(surface, delta);
        } else if (yz->parsed()) {
            doc = cmd_yau_zaslow(max_delta);
        } else if (blow->parsed()) {
            doc = cmd_blowup_check(surface);
        } else if (rr->parsed()) {
            doc = cmd_rr_solve();
        } else if (fac->parsed()) {
            doc = cmd_factorize(max_delta);
        } else if (ie->parsed()) {
            std::string text;
            if (input_path.empty()) {
                text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            } else {
                std::ifstream file(input_path);
                if (!file) {
                    throw std::invalid_argument("inclexcl: cannot open " + input_path);
                }
                text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
            }
            doc = cmd_inclexcl(text, max_sets);
        } else {
            doc = cmd_series(name, order, power);
        }
        out << doc.render(format_name == "csv" ? Format::csv : Format::json);
        if (doc.mismatch) {
            err << "univ: " << doc.command << ": identity check failed\n";
        }
        return doc.exit_code();
    } catch (const std::exception &e) {
        err << "univ: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace univ::cli
