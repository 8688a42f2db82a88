#include "fcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "fcat/errors.hpp"
#include "fcat/profiles.hpp"
#include "fcat/verify.hpp"

namespace fcat {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Pulls --config out of args and appends its key=value entries as flags,
// except for keys already given on the command line.
std::vector<std::string> expand_config(const std::vector<std::string>& args)
{
    std::vector<std::string> rest;
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 == args.size())
                throw UsageError("--config requires a path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path)
        return rest;

    std::ifstream in(*path);
    if (!in)
        throw IoError("cannot read config file " + *path);
    auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        return std::any_of(rest.begin(), rest.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(*path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0)
            key = key.substr(2);
        if (key.empty())
            throw UsageError(*path + ":" + std::to_string(lineno) + ": empty key");
        if (!given(key)) {
            extra.push_back("--" + key);
            extra.push_back(value);
        }
    }
    rest.insert(rest.end(), extra.begin(), extra.end());
    return rest;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    return f;
}

void finish_output(std::ofstream& f, const std::string& path)
{
    f.flush();
    if (!f)
        throw IoError("failed writing " + path);
}

struct URange {
    bool automatic = true;
    double lo = 0.0;
    double hi = 0.0;
};

URange parse_range(const std::string& text)
{
    if (text == "auto")
        return {};
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--u-range expects 'auto' or 'lo,hi', got '" + text + "'");
    URange r{false, 0.0, 0.0};
    try {
        std::size_t used = 0;
        const std::string a = trim(text.substr(0, comma)), b = trim(text.substr(comma + 1));
        r.lo = std::stod(a, &used);
        if (used != a.size())
            throw std::invalid_argument(a);
        r.hi = std::stod(b, &used);
        if (used != b.size())
            throw std::invalid_argument(b);
    } catch (const std::logic_error&) {
        throw UsageError("--u-range expects two numbers 'lo,hi', got '" + text + "'");
    }
    if (!(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo < r.hi))
        throw UsageError("--u-range needs finite lo < hi, got '" + text + "'");
    return r;
}

CatenoidKind parse_kind(const std::string& s)
{
    return s == "spacelike" ? CatenoidKind::Spacelike : CatenoidKind::Timelike;
}

// The profile and the u-range to sample for profile/mesh requests.
struct Resolved {
    GeneratrixProfile profile;
    double lo;
    double hi;
};

Resolved resolve(CatenoidKind kind, double C, const URange& range, bool outer, bool positive_only)
{
    if (!std::isfinite(C))
        throw UsageError("--C must be finite");
    if (kind == CatenoidKind::Spacelike) {
        if (outer)
            throw UsageError("--component applies to the timelike family only");
        const auto p = GeneratrixProfile::spacelike(C);
        if (range.automatic)
            return {p, positive_only ? 0.0 : -3.0, 3.0};
        return {p, range.lo, range.hi};
    }

    if (!range.automatic) {
        const std::vector<Interval> parts = domain_components(C);
        static constexpr Component order[] = {Component::OuterNegative, Component::Inner,
                                              Component::OuterPositive};
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Interval& iv = parts[k];
            if (range.lo >= iv.lo && range.hi <= iv.hi) {
                const Component which = parts.size() == 1 ? Component::Inner : order[k];
                return {GeneratrixProfile::timelike(C, which), range.lo, range.hi};
            }
        }
        std::ostringstream os;
        os << "u-range [" << format_number(range.lo) << ", " << format_number(range.hi)
           << "] is not inside one component of the domain of the timelike profile for C = "
           << format_number(C) << " (it meets the zero set of e^(u^2) - C u^2)";
        throw DomainError(os.str());
    }

    if (outer) {
        const auto p = GeneratrixProfile::timelike(C, Component::OuterPositive);
        const double lo = p.interval().lo;
        return {p, lo, std::max(3.0, lo + 1.0)};
    }
    const auto p = GeneratrixProfile::timelike(C, Component::Inner);
    const double lo = positive_only ? 0.0 : std::max(p.interval().lo, -3.0);
    return {p, lo, std::min(p.interval().hi, 3.0)};
}

// The sampled u-range after edge margins at degenerate ends.
std::pair<double, double> trimmed(const Resolved& r)
{
    const ParamDomain d = make_surface(r.profile, r.lo, r.hi).domain();
    return {d.u_lo, d.u_hi};
}

int cmd_table(const std::vector<double>& cs, const std::string& path, std::ostream& out)
{
    for (double C : cs)
        if (!(C > std::numbers::e + kPuncturedTolerance) || !std::isfinite(C))
            throw DomainError("table requires C > e; offending C = " + format_number(C));
    std::vector<TableRow> rows;
    rows.reserve(cs.size());
    for (double C : cs)
        rows.push_back(table_row(C));

    std::ofstream f = open_output(path);
    f << "C,u1,u2,I1,I2\n";
    for (const TableRow& r : rows)
        f << format_number(r.C) << ',' << format_number(r.u1) << ',' << format_number(r.u2) << ','
          << format_number(r.I1) << ',' << format_number(r.I2) << '\n';
    finish_output(f, path);
    out << "wrote " << rows.size() << " rows to " << path << '\n';
    return kExitOk;
}

int cmd_domain(double C, std::ostream& out)
{
    if (!(C > 0.0) || !std::isfinite(C))
        throw DomainError("domain requires C > 0; got C = " + format_number(C));
    const DomainCase dc = domain_case(C);
    const std::vector<Interval> parts = domain_components(C);
    auto end = [](double x) {
        return std::isinf(x) ? std::string(x < 0 ? "-inf" : "inf") : format_number(x);
    };
    switch (dc.tag) {
    case DomainTag::WholeLine:
        out << "WholeLine, D=R, u0=0\n";
        return kExitOk;
    case DomainTag::PuncturedAtOne:
        out << "PuncturedAtOne\n";
        break;
    case DomainTag::ThreeIntervals:
        out << "ThreeIntervals\n";
        out << "roots: u1=" << format_number(dc.roots->u1) << " u2=" << format_number(dc.roots->u2)
            << '\n';
        break;
    }
    out << "components:";
    for (const Interval& iv : parts)
        out << " (" << end(iv.lo) << ", " << end(iv.hi) << ")";
    out << '\n';
    out << "u0: inner 0, outer " << format_number(default_base_point(C, Component::OuterNegative))
        << " and " << format_number(default_base_point(C, Component::OuterPositive)) << '\n';
    if (dc.tag == DomainTag::PuncturedAtOne)
        out << "warning: C = e; the integral of the timelike profile diverges at the double roots "
               "u = -1 and u = 1, so the outer components are based at u0 = -2 and u0 = 2\n";
    return kExitOk;
}

int cmd_profile(CatenoidKind kind, double C, const URange& range, int n, bool outer,
                const std::string& path, std::ostream& out)
{
    if (n < 2)
        throw UsageError("--n must be at least 2");
    const Resolved r = resolve(kind, C, range, outer, false);
    const auto [lo, hi] = trimmed(r);
    std::vector<double> us(n);
    for (int i = 0; i < n; ++i)
        us[i] = i + 1 == n ? hi : lo + i * (hi - lo) / (n - 1);
    const std::vector<double> gs = r.profile.sample_g(us);

    std::ofstream f = open_output(path);
    f << "u,g,gprime\n";
    for (int i = 0; i < n; ++i)
        f << format_number(us[i]) << ',' << format_number(gs[i]) << ','
          << format_number(r.profile.gprime(us[i])) << '\n';
    finish_output(f, path);
    out << "wrote " << n << " samples on [" << format_number(lo) << ", " << format_number(hi)
        << "] to " << path << '\n';
    return kExitOk;
}

int cmd_mesh(CatenoidKind kind, double C, const URange& range, int nu, int nv, bool outer,
             const std::string& path, std::ostream& out)
{
    if (nu < 2 || nv < 2)
        throw UsageError("--nu and --nv must be at least 2");
    const Resolved r = resolve(kind, C, range, outer, true);
    const ParametricSurface s = make_surface(r.profile, r.lo, r.hi);
    const ParamDomain& d = s.domain();

    std::vector<LVec3> verts;
    verts.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u = i + 1 == nu ? d.u_hi : d.u_lo + i * (d.u_hi - d.u_lo) / (nu - 1);
        for (int j = 0; j < nv; ++j) {
            const double v = d.v_lo + j * (d.v_hi - d.v_lo) / nv;
            verts.push_back(evaluate(s, u, v).x);
        }
    }

    std::ofstream f = open_output(path);
    for (const LVec3& p : verts)
        f << "v " << format_number(p.x) << ' ' << format_number(p.y) << ' ' << format_number(p.z)
          << '\n';
    for (int i = 0; i + 1 < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const int a = i * nv + j + 1, b = i * nv + (j + 1) % nv + 1;
            const int c = a + nv, e = b + nv;
            f << "f " << a << ' ' << c << ' ' << e << '\n';
            f << "f " << a << ' ' << e << ' ' << b << '\n';
        }
    finish_output(f, path);
    out << "wrote " << verts.size() << " vertices and " << 2 * (nu - 1) * nv << " triangles to "
        << path << '\n';
    return kExitOk;
}

void print_report(const VerificationReport& rep, bool verbose, std::ostream& out)
{
    out << "== " << rep.suite << " ==\n";
    for (const Check& c : rep.checks)
        out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.label << ": "
            << format_number(c.value) << (c.kind == BoundKind::AtMost ? " (<= " : " (> ")
            << format_number(c.tolerance) << ")\n";
    if (verbose)
        for (const SpreadRecord& s : rep.spreads)
            out << "  " << s.label << ": min " << format_number(s.min_over_v) << ", max "
                << format_number(s.max_over_v) << ", spread " << format_number(s.spread) << '\n';
    if (!rep.spreads.empty()) {
        const auto escapes = std::count_if(rep.spreads.begin(), rep.spreads.end(),
                                           [](const SpreadRecord& s) { return s.escape; });
        out << "  " << rep.spreads.size() << " trials, " << escapes << " escape configurations\n";
    }
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    int trials = 200;
    double spread_tol = 1e-4;
    double escape_tol = 1e-10;
    double residual_tol = 1e-6;
    bool verbose = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const bool all = a.suite == "all";
    std::vector<VerificationReport> reports;
    if (all || a.suite == "tables")
        reports.push_back(table_suite());
    if (all || a.suite == "residuals") {
        ResidualOptions o;
        o.seed = a.seed;
        o.residual_tol = a.residual_tol;
        reports.push_back(residual_suite(o));
    }
    if (all || a.suite == "corollary")
        reports.push_back(corollary_suite());
    if (all || a.suite == "lemma1")
        reports.push_back(lemma1_suite(1000, a.seed));
    if (all || a.suite == "classification") {
        SweepOptions o;
        o.seed = a.seed;
        o.trials = a.trials;
        o.spread_tol = a.spread_tol;
        o.escape_tol = a.escape_tol;
        o.residual_tol = a.residual_tol;
        reports.push_back(theorem_sweep(SurfaceFamily::Spacelike, o));
        reports.push_back(theorem_sweep(SurfaceFamily::Timelike, o));
    }

    VerificationReport total;
    for (const VerificationReport& r : reports) {
        print_report(r, a.verbose, out);
        total.merge(r);
    }
    const auto failed = std::count_if(total.checks.begin(), total.checks.end(),
                                      [](const Check& c) { return !c.passed(); });
    out << "checks: " << total.checks.size() - failed << " passed, " << failed << " failed\n";
    out << "verdict: " << to_string(total.verdict()) << '\n';
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string format_number(double x)
{
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x < 0 ? "-inf" : "inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weighted-curvature catenoids of Lorentz-Minkowski space", "fcat"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");
    app.add_option("--config", "Flat key=value file; explicit flags take precedence");

    std::vector<double> table_cs;
    std::string table_out;
    auto* table = app.add_subcommand("table", "Roots u1, u2 and integrals I1, I2 for C > e as CSV");
    table->add_option("--C", table_cs, "Comma-separated constants C > e (default: the 25 reference values)")
        ->delimiter(',');
    table->add_option("--out", table_out, "Output CSV path")->required();

    double domain_c = 0.0;
    auto* domain = app.add_subcommand("domain", "Components of {u : e^(u^2) - C u^2 > 0}");
    domain->add_option("--C", domain_c, "Constant C > 0")->required();

    std::string kind = "spacelike", range_text = "auto", component = "inner", prof_out;
    double prof_c = 0.0;
    int n = 201;
    auto* profile = app.add_subcommand("profile", "Sample the generatrix u -> (g, g') as CSV");
    profile->add_option("--kind", kind, "spacelike or timelike")
        ->required()
        ->check(CLI::IsMember({"spacelike", "timelike"}));
    profile->add_option("--C", prof_c, "Integration constant")->required();
    profile->add_option("--u-range", range_text, "auto or lo,hi");
    profile->add_option("--n", n, "Number of samples")->capture_default_str();
    profile->add_option("--component", component, "inner or outer (timelike only)")
        ->check(CLI::IsMember({"inner", "outer"}));
    profile->add_option("--out", prof_out, "Output CSV path")->required();

    std::string mesh_kind = "spacelike", mesh_range = "auto", mesh_component = "inner", mesh_out;
    double mesh_c = 0.0;
    int nu = 64, nv = 64;
    auto* mesh = app.add_subcommand("mesh", "Triangulate the surface of revolution as OBJ");
    mesh->add_option("--kind", mesh_kind, "spacelike or timelike")
        ->required()
        ->check(CLI::IsMember({"spacelike", "timelike"}));
    mesh->add_option("--C", mesh_c, "Integration constant")->required();
    mesh->add_option("--u-range", mesh_range, "auto or lo,hi");
    mesh->add_option("--nu", nu, "Samples along u")->capture_default_str();
    mesh->add_option("--nv", nv, "Samples around the orbit")->capture_default_str();
    mesh->add_option("--component", mesh_component, "inner or outer (timelike only)")
        ->check(CLI::IsMember({"inner", "outer"}));
    mesh->add_option("--out", mesh_out, "Output OBJ path")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", va.suite, "all, tables, residuals, classification, corollary or lemma1")
        ->check(CLI::IsMember({"all", "tables", "residuals", "classification", "corollary", "lemma1"}))
        ->capture_default_str();
    verify->add_option("--seed", va.seed, "Seed of the randomized suites")->capture_default_str();
    verify->add_option("--trials", va.trials, "Trials per family in the classification sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--spread-tol", va.spread_tol, "Lower bound on the spread of non-classified trials");
    verify->add_option("--escape-tol", va.escape_tol, "Upper bound on the spread of escape trials");
    verify->add_option("--residual-tol", va.residual_tol, "Upper bound on max |H_f| over grids");
    verify->add_flag("--verbose", va.verbose, "List every trial");

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    try {
        if (*table) {
            if (table_cs.empty())
                for (const TableRow& r : reference_table())
                    table_cs.push_back(r.C);
            return cmd_table(table_cs, table_out, out);
        }
        if (*domain)
            return cmd_domain(domain_c, out);
        if (*profile)
            return cmd_profile(parse_kind(kind), prof_c, parse_range(range_text), n,
                               component == "outer", prof_out, out);
        if (*mesh)
            return cmd_mesh(parse_kind(mesh_kind), mesh_c, parse_range(mesh_range), nu, nv,
                            mesh_component == "outer", mesh_out, out);
        if (*verify)
            return cmd_verify(va, out);
    } catch (const DegeneratePointError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace fcat
