#include "amq/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace amq {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string case_name(CaseId c) {
    switch (c) {
        case CaseId::C1: return "C1";
        case CaseId::C2: return "C2";
        case CaseId::C3: return "C3";
    }
    return "?";
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? fmt17(*v) : std::string();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    return std::isfinite(v) ? fmt17(v) : std::string("null");
}

std::string json_opt(const std::optional<double>& v) {
    return v ? json_number(*v) : std::string("null");
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ParamSet random_param_set(std::mt19937_64& rng, double a, double b) {
    for (int tries = 0; tries < 1000; ++tries) {
        ParamSet p;
        p.a = a;
        p.b = b;
        p.lambda = uniform01(rng);
        p.mu = uniform01(rng);
        p.alpha = 1.0 - uniform01(rng);  // (0, 1]
        p.m = 1.0 - uniform01(rng);
        p.q = 1.0 + 2.0 * uniform01(rng);
        if (validate_params(p).ok() && p.mb() - p.a >= 0.01) return p;
    }
    throw std::runtime_error("could not draw a valid random ParamSet for a=" + fmt17(a) +
                             ", b=" + fmt17(b));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<double> grid_from_json(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw std::runtime_error("config missing grid '" + key + "'");
    if (!j[key].is_array() || j[key].empty())
        throw std::runtime_error("config grid '" + key + "' must be a non-empty array");
    std::vector<double> v;
    for (const auto& x : j[key]) {
        if (!x.is_number()) throw std::runtime_error("config grid '" + key + "' must be numeric");
        v.push_back(x.get<double>());
    }
    return v;
}

}  // namespace

double parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        }
        size_t un = 0, ud = 0;
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        double n = std::stod(num, &un);
        double d = std::stod(den, &ud);
        if (un != num.size() || ud != den.size() || d == 0.0) throw std::invalid_argument(text);
        return n / d;
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse number or fraction: '" + text + "'");
    }
}

double default_tolerance() {
    if (const char* env = std::getenv("AMQ_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1e-10;
}

CampaignConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("config must be a JSON object");

    CampaignConfig cfg;
    if (!j.contains("functions") || !j["functions"].is_array() || j["functions"].empty())
        throw std::runtime_error("no functions selected");
    for (const auto& f : j["functions"]) {
        if (!f.is_string()) throw std::runtime_error("'functions' must be an array of ids");
        cfg.functions.push_back(f.get<std::string>());
    }
    cfg.lambda = grid_from_json(j, "lambda");
    cfg.mu = grid_from_json(j, "mu");
    cfg.alpha = grid_from_json(j, "alpha");
    cfg.m = grid_from_json(j, "m");
    cfg.q = grid_from_json(j, "q");
    cfg.a = j.value("a", 0.0);
    cfg.b = j.value("b", 1.0);
    cfg.domain_upper = j.value("domain_upper", 4.0);
    cfg.tol = j.value("tol", default_tolerance());
    cfg.cert_points = j.value("cert_points", 4096);
    cfg.cert_tol = j.value("cert_tol", 1e-12);
    cfg.out = j.value("out", std::string());
    cfg.format = j.value("format", std::string("csv"));
    cfg.log = j.value("log", std::string());
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.random_rows = j.value("random_rows", 0);

    if (cfg.format != "csv" && cfg.format != "json")
        throw std::runtime_error("format must be 'csv' or 'json'");
    if (!(cfg.tol > 0.0)) throw std::runtime_error("tol must be positive");
    if (cfg.cert_points < 2) throw std::runtime_error("cert_points must be at least 2");
    if (cfg.random_rows < 0) throw std::runtime_error("random_rows must be non-negative");
    return cfg;
}

CampaignConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

CampaignConfig default_campaign_config() {
    CampaignConfig cfg;
    cfg.functions = {"x2", "exp", "xexp", "inv1p", "sin"};
    cfg.lambda = {0.0, 1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0};
    cfg.mu = {0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
    cfg.alpha = {0.25, 0.5, 1.0};
    cfg.m = {0.25, 0.5, 1.0};
    cfg.q = {1.0, 2.0, 3.0};
    cfg.a = 0.0;
    cfg.b = 1.0;
    cfg.tol = 1e-10;
    cfg.seed = 1;
    return cfg;
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
    if (cfg.functions.empty()) throw std::runtime_error("no functions selected");

    std::vector<TestFunction> fns;
    for (const auto& id : cfg.functions) {
        auto f = find_function(id, cfg.domain_upper);
        if (!f) throw std::runtime_error("unknown function '" + id + "'");
        fns.push_back(std::move(*f));
    }

    ReportOptions opts;
    opts.tol = cfg.tol;
    opts.cert_points = cfg.cert_points;
    opts.cert_tol = cfg.cert_tol;
    opts.slack = cfg.slack;

    CampaignResult result;
    std::mt19937_64 rng(cfg.seed);

    auto process = [&](const TestFunction& fn, const ParamSet& p) {
        ValidationResult pv = validate_params(p);
        ValidationResult dv = pv.ok() ? validate_domain(p, fn, TheoremId::Thm22)
                                      : ValidationResult{};
        if (!pv.ok() || !dv.ok()) {
            std::ostringstream os;
            os << "skip function=" << fn.id << " lambda=" << p.lambda << " mu=" << p.mu
               << " alpha=" << p.alpha << " m=" << p.m << " q=" << p.q << ": "
               << (pv.ok() ? dv.to_string() : pv.to_string());
            result.skip_log.push_back(os.str());
            ++result.summary.skipped;
            return;
        }

        ReportRow row;
        row.function = fn.id;
        row.params = p;
        try {
            row.report = bound_report(fn, p, opts);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        ++result.summary.rows;
        if (!row.evaluated()) {
            ++result.summary.errors;
        } else if (row.report.certificate.pass) {
            ++result.summary.cert_passes;
            const auto& rep = row.report;
            const double err = rep.quad.true_error;
            const bool t24_gated = rep.bound_t24 && rep.thm24_hypothesis_ok.value_or(false);
            if (rep.bound_t22 && err > *rep.bound_t22 + cfg.slack) ++result.summary.violations_t22;
            if (t24_gated) {
                ++result.summary.t24_checked;
                if (err > *rep.bound_t24 + cfg.slack) ++result.summary.violations_t24;
            }
            if (rep.bound_t26 && err > *rep.bound_t26 + cfg.slack) ++result.summary.violations_t26;
            auto track = [](double& worst, const std::optional<double>& ratio) {
                if (ratio && std::isfinite(*ratio)) worst = std::max(worst, *ratio);
            };
            track(result.summary.worst_ratio_t22, rep.ratio_t22);
            if (t24_gated) track(result.summary.worst_ratio_t24, rep.ratio_t24);
            track(result.summary.worst_ratio_t26, rep.ratio_t26);
        }
        result.rows.push_back(std::move(row));
    };

    for (const auto& fn : fns) {
        for (double lambda : cfg.lambda)
            for (double mu : cfg.mu)
                for (double alpha : cfg.alpha)
                    for (double m : cfg.m)
                        for (double q : cfg.q) {
                            ParamSet p{cfg.a, cfg.b, lambda, mu, alpha, m, q};
                            process(fn, p);
                        }
        for (int i = 0; i < cfg.random_rows; ++i) {
            process(fn, random_param_set(rng, cfg.a, cfg.b));
        }
    }

    if (!cfg.out.empty()) emit_report(result.rows, cfg.format, cfg.out);
    if (!cfg.log.empty()) {
        std::ostringstream os;
        for (const auto& line : result.skip_log) os << line << "\n";
        os << "skipped=" << result.summary.skipped << " rows=" << result.summary.rows
           << " errors=" << result.summary.errors << "\n";
        write_file(cfg.log, os.str());
    }
    return result;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "function,a,b,lambda,mu,alpha,m,q,case,cert_violation,true_error,"
          "bound_t22,bound_c23,bound_t24,bound_t26,bound_simpson_classical,"
          "ratio_t22,ratio_t24,ratio_t26,identity_residual\n";
    for (const auto& row : rows) {
        const ParamSet& p = row.params;
        os << row.function << ',' << fmt17(p.a) << ',' << fmt17(p.b) << ',' << fmt17(p.lambda)
           << ',' << fmt17(p.mu) << ',' << fmt17(p.alpha) << ',' << fmt17(p.m) << ','
           << fmt17(p.q) << ',' << case_name(select_case(p)) << ',';
        if (row.evaluated()) {
            const BoundReport& r = row.report;
            os << fmt17(r.certificate.max_violation) << ',' << fmt17(r.quad.true_error) << ','
               << opt_cell(r.bound_t22) << ',' << opt_cell(r.bound_c23) << ','
               << opt_cell(r.bound_t24) << ',' << opt_cell(r.bound_t26) << ','
               << opt_cell(r.bound_simpson_classical) << ',' << opt_cell(r.ratio_t22) << ','
               << opt_cell(r.ratio_t24) << ',' << opt_cell(r.ratio_t26) << ','
               << fmt17(r.identity_residual);
        } else {
            os << ",,,,,,,,,,";
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& row = rows[i];
        const ParamSet& p = row.params;
        os << "  {\"function\":\"" << json_escape(row.function) << "\""
           << ",\"a\":" << json_number(p.a) << ",\"b\":" << json_number(p.b)
           << ",\"lambda\":" << json_number(p.lambda) << ",\"mu\":" << json_number(p.mu)
           << ",\"alpha\":" << json_number(p.alpha) << ",\"m\":" << json_number(p.m)
           << ",\"q\":" << json_number(p.q) << ",\"case\":\"" << case_name(select_case(p))
           << "\"";
        if (row.evaluated()) {
            const BoundReport& r = row.report;
            os << ",\"cert_violation\":" << json_number(r.certificate.max_violation)
               << ",\"cert_pass\":" << (r.certificate.pass ? "true" : "false")
               << ",\"true_error\":" << json_number(r.quad.true_error)
               << ",\"bound_t22\":" << json_opt(r.bound_t22)
               << ",\"bound_c23\":" << json_opt(r.bound_c23)
               << ",\"bound_t24\":" << json_opt(r.bound_t24)
               << ",\"bound_t26\":" << json_opt(r.bound_t26)
               << ",\"bound_simpson_classical\":" << json_opt(r.bound_simpson_classical)
               << ",\"ratio_t22\":" << json_opt(r.ratio_t22)
               << ",\"ratio_t24\":" << json_opt(r.ratio_t24)
               << ",\"ratio_t26\":" << json_opt(r.ratio_t26)
               << ",\"thm24_hypothesis_ok\":"
               << (r.thm24_hypothesis_ok ? (*r.thm24_hypothesis_ok ? "true" : "false")
                                         : "null")
               << ",\"identity_residual\":" << json_number(r.identity_residual)
               << ",\"violation\":" << (r.violation ? "true" : "false");
        } else {
            os << ",\"error\":\"" << json_escape(row.error) << "\"";
        }
        os << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

void emit_report(const std::vector<ReportRow>& rows, const std::string& format,
                 const std::string& path) {
    if (format == "csv") {
        write_file(path, to_csv(rows));
    } else if (format == "json") {
        write_file(path, to_json(rows));
    } else {
        throw std::runtime_error("unknown report format: " + format);
    }
}

}  // namespace amq
