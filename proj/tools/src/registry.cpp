#include "logalg_cli/registry.hpp"

#include "logalg/error.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace logalg::cli {

namespace {

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string &s, int line)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception &) {
        // reported below
    }
    raise(Errc::ParseError, "line " + std::to_string(line) + ": '" + s + "' is not an integer");
}

} // namespace

CurveModel CurveSpec::model() const
{
    return derive_invariants({a[0], a[1], a[2], a[3], a[4]}, conductor);
}

NewformCoeffs CurveSpec::coefficients(int count) const
{
    switch (source) {
    case CoeffSource::EtaProduct:
        return eta_product_coeffs(conductor, count);
    case CoeffSource::Inline:
        return hecke_expand(ap, conductor, count);
    case CoeffSource::File: {
        NewformCoeffs f = load_coeffs(file.string(), conductor);
        if (f.size() > count) {
            f.a.resize(static_cast<std::size_t>(count));
        }
        return f;
    }
    }
    return {};
}

std::string CurveSpec::to_text() const
{
    std::ostringstream os;
    os << "name = " << name << "\n";
    os << "coefficients = " << a[0] << " " << a[1] << " " << a[2] << " " << a[3] << " " << a[4] << "\n";
    os << "conductor = " << conductor << "\n";
    switch (source) {
    case CoeffSource::EtaProduct:
        os << "source = eta\n";
        break;
    case CoeffSource::File:
        os << "source = file:" << file.string() << "\n";
        break;
    case CoeffSource::Inline:
        os << "source = inline\nap =";
        for (const auto &[p, v] : ap) {
            os << " " << p << ":" << v;
        }
        os << "\n";
        break;
    }
    os << "sign = " << (sign > 0 ? "+1" : "-1") << "\n";
    return os.str();
}

CurveSpec parse_curve_spec(std::string_view text, const std::filesystem::path &base_dir)
{
    CurveSpec s;
    bool have_coeffs = false, have_conductor = false, have_ap = false;
    std::istringstream is{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const std::string body = trim(raw.substr(0, raw.find('#')));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            raise(Errc::ParseError, "line " + std::to_string(line) + ": expected 'key = value'");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        std::istringstream vs(value);
        std::string tok;
        if (key == "name") {
            s.name = value;
        } else if (key == "coefficients") {
            std::vector<long> v;
            while (vs >> tok) {
                v.push_back(parse_long(tok, line));
            }
            if (v.size() != 5) {
                raise(Errc::ParseError, "line " + std::to_string(line) + ": need five coefficients a1 a2 a3 a4 a6");
            }
            std::copy(v.begin(), v.end(), s.a.begin());
            have_coeffs = true;
        } else if (key == "conductor") {
            s.conductor = parse_long(value, line);
            if (s.conductor < 1) {
                raise(Errc::ParseError, "line " + std::to_string(line) + ": conductor must be positive");
            }
            have_conductor = true;
        } else if (key == "source") {
            if (value == "eta") {
                s.source = CoeffSource::EtaProduct;
            } else if (value == "inline") {
                s.source = CoeffSource::Inline;
            } else if (value.rfind("file:", 0) == 0 && value.size() > 5) {
                s.source = CoeffSource::File;
                s.file = value.substr(5);
                if (s.file.is_relative() && !base_dir.empty()) {
                    s.file = base_dir / s.file;
                }
            } else {
                raise(Errc::ParseError, "line " + std::to_string(line) + ": source must be eta, inline or file:<path>");
            }
        } else if (key == "ap") {
            while (vs >> tok) {
                const auto colon = tok.find(':');
                if (colon == std::string::npos) {
                    raise(Errc::ParseError, "line " + std::to_string(line) + ": expected p:a_p, got '" + tok + "'");
                }
                s.ap[parse_long(tok.substr(0, colon), line)] = parse_long(tok.substr(colon + 1), line);
            }
            have_ap = true;
        } else if (key == "sign") {
            const long e = parse_long(value[0] == '+' ? value.substr(1) : value, line);
            if (e != 1 && e != -1) {
                raise(Errc::ParseError, "line " + std::to_string(line) + ": sign must be +1 or -1");
            }
            s.sign = static_cast<int>(e);
        } else {
            raise(Errc::ParseError, "line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!have_coeffs || !have_conductor) {
        raise(Errc::ParseError, "curve spec needs 'coefficients' and 'conductor'");
    }
    if (s.source == CoeffSource::Inline && !have_ap) {
        raise(Errc::ParseError, "source = inline needs an 'ap' line");
    }
    if (s.source == CoeffSource::File && !std::filesystem::exists(s.file)) {
        raise(Errc::InvalidArgument, "coefficient file " + s.file.string() + " does not exist");
    }
    if (s.name.empty()) {
        s.name = "N" + std::to_string(s.conductor);
    }
    return s;
}

CurveSpec load_curve_spec(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        raise(Errc::InvalidArgument, "cannot read curve spec " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str(), path.parent_path());
}

const std::vector<CurveSpec> &builtin_curves()
{
    static const std::vector<CurveSpec> curves = [] {
        const std::vector<std::tuple<std::string, long, std::array<long, 5>>> table{
            {"11a1", 11, {0, -1, 1, -10, -20}}, {"14a1", 14, {1, 0, 1, 4, -6}}, {"15a1", 15, {1, 1, 1, -10, -10}},
            {"20a1", 20, {0, 1, 0, 4, 4}},      {"24a1", 24, {0, -1, 0, -4, 4}}, {"27a1", 27, {0, 0, 1, 0, -7}},
            {"32a1", 32, {0, 0, 0, 4, 0}},      {"36a1", 36, {0, 0, 0, 0, 1}}};
        std::vector<CurveSpec> out;
        for (const auto &[name, N, a] : table) {
            CurveSpec s;
            s.name = name;
            s.conductor = N;
            s.a = a;
            s.sign = 1; // all of rank 0
            out.push_back(s);
        }
        return out;
    }();
    return curves;
}

CurveSpec resolve_curve(std::string_view ref, const std::filesystem::path &registry_dir)
{
    const std::string r(ref);
    if (r.rfind("builtin:", 0) == 0) {
        const std::string key = r.substr(8);
        for (const auto &c : builtin_curves()) {
            if (std::to_string(c.conductor) == key || c.name == key) {
                return c;
            }
        }
        raise(Errc::InvalidArgument, "no builtin curve '" + key + "'");
    }
    if (std::filesystem::is_regular_file(r)) {
        return load_curve_spec(r);
    }
    std::filesystem::path dir = registry_dir;
    if (dir.empty()) {
        if (const char *env = std::getenv("LOGALG_CURVE_DIR")) {
            dir = env;
        }
    }
    if (!dir.empty() && std::filesystem::is_regular_file(dir / (r + ".curve"))) {
        return load_curve_spec(dir / (r + ".curve"));
    }
    raise(Errc::InvalidArgument, "unknown curve '" + r + "' (builtin:N, a spec file, or a registry name)");
}

} // namespace logalg::cli
