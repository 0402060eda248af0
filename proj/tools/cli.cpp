#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <qseries/eta.hpp>
#include <qseries/virasoro.hpp>

namespace qseries::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* output_dir_env = "QSERIES_OUTPUT_DIR";

void add_common_options(CLI::App& app, RunConfig& config, std::string& order_text, std::string& format_text)
{
    app.add_option("--order", order_text, "Exponent bound as p/q (default 20)");
    app.add_option("--format", format_text, "Output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--output", config.output_path, "Write output to this file (relative to $QSERIES_OUTPUT_DIR if set)");
}

void write_output(const RunConfig& config, const std::string& content, std::ostream& out)
{
    if (!config.output_path) {
        out << content;
        return;
    }
    std::filesystem::path path(*config.output_path);
    if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0' && path.is_relative()) {
        path = std::filesystem::path(dir) / path;
    }
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open output file " + path.string());
    }
    file << content;
}

std::string series_document(const std::string& name, const QSeries& x, OutputFormat format)
{
    if (format == OutputFormat::text) {
        return to_text(x);
    }
    json doc;
    doc["series"] = name;
    doc["D"] = x.grid_denominator();
    doc["P"] = to_string(x.precision());
    doc["terms"] = json::array();
    for (const auto& t : x.terms()) {
        doc["terms"].push_back(json::array({to_string(x.exponent_of(t)), to_string(t.coeff)}));
    }
    return doc.dump(2) + "\n";
}

int run_series(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    NamedSeriesId id;
    id.kind = parse_series_kind(config.name);
    id.power = config.power;
    const auto x = build_named_series(id, config.order);
    if (config.window_audit) {
        switch (id.kind) {
        case SeriesKind::eta:
            err << "# eta factors used: " << eta_factor_count(config.order) << '\n';
            break;
        case SeriesKind::pentagonal_sum:
            err << "# pentagonal |n| bound: " << pentagonal_index_bound(config.order) << '\n';
            break;
        case SeriesKind::jacobi_cube_sum:
            err << "# jacobi m bound: " << jacobi_index_bound(config.order) << '\n';
            break;
        default:
            err << "# no truncation audit for " << config.name << '\n';
            break;
        }
    }
    write_output(config, series_document(config.name, x, config.format), out);
    return 0;
}

int run_character(const RunConfig& config, std::ostream& out)
{
    const auto model = make_model(config.s, config.t);
    // h^{m,n}_{s,t} = h^{n,m}_{t,s}: follow the canonical swap.
    const bool swapped = model.s != config.s;
    const auto label = make_label(model, swapped ? config.n : config.m, swapped ? config.m : config.n);
    QSeries x;
    if (config.form == "double") {
        x = character_double_sum(model, label, config.order);
    } else if (config.form == "chi") {
        x = character_chi_form(model, label, config.order);
    } else if (config.form == "product") {
        if (model.s != 2) {
            throw std::invalid_argument("the product form needs s = 2");
        }
        const int i = std::min(label.n, model.t - label.n);
        x = character_product_2k1(model.k, i, config.order);
    } else {
        throw std::invalid_argument("unknown form '" + config.form + "'");
    }
    std::ostringstream name;
    name << "char(" << model.s << "," << model.t << ";" << label.m << "," << label.n << ")";
    write_output(config, series_document(name.str(), x, config.format), out);
    return 0;
}

std::string reports_document(const std::optional<std::string>& manifest_version,
                             const std::vector<VerificationReport>& reports, OutputFormat format, double seconds)
{
    if (format == OutputFormat::text) {
        std::string text;
        std::size_t matched = 0;
        for (const auto& r : reports) {
            text += to_text_record(r) + "\n";
            matched += r.match ? 1 : 0;
        }
        if (manifest_version) {
            text += "summary manifest=" + *manifest_version + " reports=" + std::to_string(reports.size())
                    + " matched=" + std::to_string(matched) + "\n";
        }
        return text;
    }
    json doc;
    doc["manifest_version"] = manifest_version ? json(*manifest_version) : json(nullptr);
    doc["reports"] = json::array();
    for (const auto& r : reports) {
        doc["reports"].push_back(json::parse(to_json(r)));
    }
    doc["total_runtime_seconds"] = seconds;
    return doc.dump(2) + "\n";
}

int finish_reports(const RunConfig& config, const std::optional<std::string>& version,
                   const std::vector<VerificationReport>& reports, double seconds, std::ostream& out,
                   std::ostream& err)
{
    write_output(config, reports_document(version, reports, config.format, seconds), out);
    return report_status(reports, err);
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    IdentitySpec spec;
    spec.kind = parse_identity_kind(config.name);
    spec.k = config.k;
    spec.s = config.s;
    spec.t = config.t;
    if (spec.kind == IdentityKind::denominator || spec.kind == IdentityKind::wronskian_raw
        || spec.kind == IdentityKind::wronskian_normalized) {
        make_model(spec.s, spec.t); // validate before computing
    }
    std::vector<VerificationReport> reports{verify_identity(spec, config.order)};
    if (config.window_audit && spec.kind == IdentityKind::macdonald) {
        err << "# lattice window |n_i| <= "
            << macdonald_window(spec.k, make_rational(2 * spec.k * spec.k - spec.k, 24) + config.order) << '\n';
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return finish_reports(config, std::nullopt, reports, elapsed.count(), out, err);
}

int run_suite(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    const auto manifest = load_manifest(config.manifest_path.value_or(default_manifest_path()), config.max_st,
                                        config.order_given ? std::optional<Rational>(config.order) : std::nullopt);
    std::vector<VerificationReport> reports;
    reports.reserve(manifest.jobs.size());
    for (const auto& job : manifest.jobs) {
        reports.push_back(verify_identity(job.spec, job.order));
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return finish_reports(config, manifest.version, reports, elapsed.count(), out, err);
}

} // namespace

int report_status(const std::vector<VerificationReport>& reports, std::ostream& err)
{
    for (const auto& r : reports) {
        if (!r.match) {
            err << "first failing report: " << to_text_record(r) << '\n';
            return 1;
        }
    }
    return 0;
}

std::string default_manifest_path()
{
    return QSERIES_DEFAULT_MANIFEST;
}

SuiteManifest load_manifest(const std::string& path, std::optional<int> max_st, std::optional<Rational> order)
{
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot read manifest " + path);
    }
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed manifest " + path + ": " + e.what());
    }
    if (!doc.contains("manifest_version") || !doc.contains("entries")) {
        throw std::invalid_argument("manifest needs manifest_version and entries");
    }
    SuiteManifest out;
    out.version = doc["manifest_version"].get<std::string>();
    for (const auto& entry : doc["entries"]) {
        const auto kind = parse_identity_kind(entry.at("identity").get<std::string>());
        const Rational entry_order = order ? *order : parse_rational(entry.value("order", std::string("20")));
        switch (kind) {
        case IdentityKind::euler:
        case IdentityKind::jacobi:
        case IdentityKind::weber:
            out.jobs.push_back(SuiteJob{IdentitySpec{kind, 0, 0, 0}, entry_order});
            break;
        case IdentityKind::macdonald:
            for (const auto& k : entry.at("k")) {
                out.jobs.push_back(SuiteJob{IdentitySpec{kind, k.get<int>(), 0, 0}, entry_order});
            }
            break;
        case IdentityKind::denominator:
        case IdentityKind::wronskian_raw:
        case IdentityKind::wronskian_normalized:
            for (const auto& model : models_up_to(max_st ? *max_st : entry.at("max_st").get<int>())) {
                out.jobs.push_back(SuiteJob{IdentitySpec{kind, 0, model.s, model.t}, entry_order});
            }
            break;
        }
    }
    return out;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out)
{
    RunConfig config;
    std::string order_text;
    std::string format_text = "text";

    CLI::App app{"Exact q-series builder and identity verifier", "qseries"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "Build a named series");
    series->add_option("name", config.name,
                       "eta, eta-power, g2, weber-f, weber-f1, weber-f2, pentagonal, jacobi-cube")
        ->required();
    series->add_option("--power", config.power, "Exponent for eta-power")->check(CLI::PositiveNumber);
    series->add_flag("--window-audit", config.window_audit, "Report truncation bounds on stderr");
    add_common_options(*series, config, order_text, format_text);

    auto* character = app.add_subcommand("char", "Build a minimal-model character");
    character->add_option("--s", config.s)->required();
    character->add_option("--t", config.t)->required();
    character->add_option("--m", config.m)->required();
    character->add_option("--n", config.n)->required();
    character->add_option("--form", config.form, "double, chi or product")
        ->check(CLI::IsMember({"double", "chi", "product"}));
    add_common_options(*character, config, order_text, format_text);

    auto* verify = app.add_subcommand("verify", "Verify an identity, or a suite from a manifest");
    verify->add_option("identity", config.name,
                       "euler, jacobi, macdonald, denominator, wronskian-raw, wronskian-normalized, weber, suite")
        ->required();
    verify->add_option("--k", config.k);
    verify->add_option("--s", config.s);
    verify->add_option("--t", config.t);
    verify->add_option("--manifest", config.manifest_path, "Suite manifest (JSON)");
    verify->add_option("--max-st", config.max_st, "Override the model grid bound s*t of the suite");
    verify->add_flag("--window-audit", config.window_audit, "Report lattice windows on stderr");
    add_common_options(*verify, config, order_text, format_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    if (series->parsed()) {
        config.command = Command::series;
    } else if (character->parsed()) {
        config.command = Command::character;
    } else {
        config.command = config.name == "suite" ? Command::suite : Command::verify;
    }
    if (!order_text.empty()) {
        config.order = parse_rational(order_text);
        config.order_given = true;
    }
    if (config.order <= 0) {
        throw std::invalid_argument("--order must be greater than 0");
    }
    config.format = format_text == "structured" ? OutputFormat::structured : OutputFormat::text;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::series:
            return run_series(config, out, err);
        case Command::character:
            return run_character(config, out);
        case Command::verify:
            return run_verify(config, out, err);
        case Command::suite:
            return run_suite(config, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::optional<RunConfig> config;
    try {
        config = parse_args(argc, argv, out);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\nrun 'qseries --help' for usage\n";
        return 2;
    }
    if (!config) {
        return 0;
    }
    return run(*config, out, err);
}

} // namespace qseries::cli
