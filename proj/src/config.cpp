#include "focksim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace focksim::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_real(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw ConfigError("trailing characters in number '" + text + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        throw ConfigError("cannot parse number '" + text + "'");
    }
}

int parse_int(const std::string& text) {
    const double v = parse_real(text);
    const int n = static_cast<int>(std::llround(v));
    if (std::abs(v - n) > 1e-9) throw ConfigError("expected an integer, got '" + text + "'");
    return n;
}

// key=value pairs after the leading token
std::map<std::string, std::string> parse_kv(const std::vector<std::string>& toks, std::size_t start) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = start; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + toks[i] + "'");
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

}  // namespace

cplx parse_complex(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I') return cplx(parse_real(s), 0.0);

    const std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // purely imaginary
        if (body.empty() || body == "+") return cplx(0.0, 1.0);
        if (body == "-") return cplx(0.0, -1.0);
        return cplx(0.0, parse_real(body));
    }
    const std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return cplx(parse_real(re), parse_real(im));
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string format_complex(cplx v) {
    if (v.imag() == 0.0) return format_sci(v.real());
    std::string s = format_sci(v.real());
    s += (v.imag() < 0.0 ? "-" : "+");
    s += format_sci(std::abs(v.imag()));
    s += "i";
    return s;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("bad section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section == "state") {
            if (key != "spec") throw ConfigError("unknown state key '" + key + "'");
            const auto toks = split_ws(value);
            if (toks.empty()) throw ConfigError("empty state spec at line " + std::to_string(lineno));
            states::StateSpec spec;
            spec.family = toks[0];
            for (const auto& [k, v] : parse_kv(toks, 1)) spec.params[k] = parse_complex(v);
            cfg.state_specs.push_back(std::move(spec));
        } else if (section == "truncation") {
            if (key == "cutoff") {
                std::vector<int> cuts;
                std::stringstream cs(value);
                std::string item;
                while (std::getline(cs, item, ',')) cuts.push_back(parse_int(trim(item)));
                cfg.cutoff_override = cuts;
            } else if (key == "tail") {
                cfg.tail = parse_real(value);
            } else if (key == "headroom") {
                cfg.headroom = parse_int(value);
            } else if (key == "tolerance") {
                cfg.tolerance_override = parse_real(value);
            } else {
                throw ConfigError("unknown truncation key '" + key + "'");
            }
        } else if (section == "pipeline") {
            if (key != "step") throw ConfigError("unknown pipeline key '" + key + "'");
            const auto toks = split_ws(value);
            if (toks.empty()) throw ConfigError("empty pipeline step");
            PipelineStep step;
            step.op = toks[0];
            for (const auto& [k, v] : parse_kv(toks, 1)) step.params[k] = parse_complex(v);
            cfg.pipeline.push_back(std::move(step));
        } else if (section == "witnesses") {
            if (key != "witness") throw ConfigError("unknown witnesses key '" + key + "'");
            const auto toks = split_ws(value);
            if (toks.empty()) throw ConfigError("empty witness entry");
            WitnessSpec w;
            w.name = toks[0];
            for (const auto& [k, v] : parse_kv(toks, 1)) {
                if (k == "m")
                    w.m = parse_int(v);
                else if (k == "n")
                    w.n = parse_int(v);
                else if (k == "xi")
                    w.xi = (v == "auto") ? std::optional<double>{} : std::optional<double>{parse_real(v)};
                else
                    throw ConfigError("unknown witness option '" + k + "'");
            }
            cfg.witnesses.push_back(std::move(w));
        } else if (section == "amplifier") {
            if (!cfg.amplifier) cfg.amplifier = AmplifierSpec{};
            auto& a = *cfg.amplifier;
            if (key == "A_a")
                a.A_a = parse_real(value);
            else if (key == "C_a")
                a.C_a = parse_real(value);
            else if (key == "A_b")
                a.A_b = parse_real(value);
            else if (key == "C_b")
                a.C_b = parse_real(value);
            else if (key == "t")
                a.t = parse_real(value);
            else if (key == "dt")
                a.dt = parse_real(value);
            else if (key == "method")
                a.method = value;
            else
                throw ConfigError("unknown amplifier key '" + key + "'");
        } else if (section == "scan") {
            if (key != "axis") throw ConfigError("unknown scan key '" + key + "'");
            const auto toks = split_ws(value);
            if (toks.empty()) throw ConfigError("empty scan axis");
            ScanAxis ax;
            ax.target = toks[0];
            for (const auto& [k, v] : parse_kv(toks, 1)) {
                if (k == "from")
                    ax.from = parse_real(v);
                else if (k == "to")
                    ax.to = parse_real(v);
                else if (k == "steps")
                    ax.steps = parse_int(v);
                else
                    throw ConfigError("unknown axis option '" + k + "'");
            }
            if (ax.steps < 1) throw ConfigError("axis needs steps >= 1");
            cfg.axes.push_back(std::move(ax));
        } else if (section == "output") {
            if (key == "format") {
                if (value != "csv" && value != "json") throw ConfigError("format must be csv or json");
                cfg.output.format = value;
            } else if (key == "path") {
                cfg.output.path = value;
            } else {
                throw ConfigError("unknown output key '" + key + "'");
            }
        } else if (section.empty()) {
            throw ConfigError("entry before any [section] at line " + std::to_string(lineno));
        } else {
            throw ConfigError("unknown section '" + section + "'");
        }
    }
    if (cfg.axes.size() > 2) throw ConfigError("at most two scan axes");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[state]\n";
    for (const auto& spec : cfg.state_specs) {
        out << "spec = " << spec.family;
        for (const auto& [k, v] : spec.params) out << " " << k << "=" << format_complex(v);
        out << "\n";
    }
    out << "\n[truncation]\n";
    if (cfg.cutoff_override) {
        out << "cutoff = ";
        for (std::size_t i = 0; i < cfg.cutoff_override->size(); ++i)
            out << (i ? "," : "") << (*cfg.cutoff_override)[i];
        out << "\n";
    }
    out << "tail = " << format_sci(cfg.tail) << "\n";
    out << "headroom = " << cfg.headroom << "\n";
    if (cfg.tolerance_override) out << "tolerance = " << format_sci(*cfg.tolerance_override) << "\n";
    if (!cfg.pipeline.empty()) {
        out << "\n[pipeline]\n";
        for (const auto& s : cfg.pipeline) {
            out << "step = " << s.op;
            for (const auto& [k, v] : s.params) out << " " << k << "=" << format_complex(v);
            out << "\n";
        }
    }
    if (!cfg.witnesses.empty()) {
        out << "\n[witnesses]\n";
        for (const auto& w : cfg.witnesses) {
            out << "witness = " << w.name << " m=" << w.m << " n=" << w.n;
            out << " xi=" << (w.xi ? format_sci(*w.xi) : std::string("auto"));
            out << "\n";
        }
    }
    if (cfg.amplifier) {
        const auto& a = *cfg.amplifier;
        out << "\n[amplifier]\n";
        out << "A_a = " << format_sci(a.A_a) << "\nC_a = " << format_sci(a.C_a) << "\n";
        out << "A_b = " << format_sci(a.A_b) << "\nC_b = " << format_sci(a.C_b) << "\n";
        out << "t = " << format_sci(a.t) << "\n";
        if (a.dt) out << "dt = " << format_sci(*a.dt) << "\n";
        out << "method = " << a.method << "\n";
    }
    if (!cfg.axes.empty()) {
        out << "\n[scan]\n";
        for (const auto& ax : cfg.axes)
            out << "axis = " << ax.target << " from=" << format_sci(ax.from) << " to=" << format_sci(ax.to)
                << " steps=" << ax.steps << "\n";
    }
    out << "\n[output]\nformat = " << cfg.output.format << "\n";
    if (!cfg.output.path.empty()) out << "path = " << cfg.output.path << "\n";
    return out.str();
}

}  // namespace focksim::cli
