#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "scatlab/delpezzo.hpp"
#include "scatlab/embed.hpp"
#include "scatlab/errors.hpp"
#include "scatlab/geometry.hpp"
#include "scatlab/io.hpp"

namespace scatlab::cli {

using json = nlohmann::ordered_json;

namespace {

// Rough cost: a completed D^{l,l} at order K has O(K^2) walls with O(K^2) terms each;
// D^{3,3} takes ~0.1 s at K = 14 and ~1.5 s at K = 22 on one core.
constexpr int kDefaultMaxOrder = 30;
constexpr int kDefaultOrder = 12;

LatticeVector parse_vector(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw PreconditionError("expected a,b but got '" + s + "'");
    try {
        std::size_t used = 0;
        std::int64_t a = std::stoll(s.substr(0, comma), &used);
        if (used != comma)
            throw std::invalid_argument(s);
        std::string rest = s.substr(comma + 1);
        std::int64_t b = std::stoll(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw PreconditionError("expected a,b but got '" + s + "'");
    }
}

json vec(LatticeVector v)
{
    return json::array({v.a, v.b});
}

json poly(const TPoly& p)
{
    json arr = json::array();
    for (const auto& [k, c] : p)
        arr.push_back({{"t", k}, {"c", to_string(c)}});
    return arr;
}

json integer(const Integer& n)
{
    if (n.fits_slong_p())
        return json(n.get_si());
    return json(n.get_str());
}

int checked_order(int order)
{
    if (order < 0)
        throw PreconditionError("order must be nonnegative");
    if (order > max_order())
        throw PreconditionError("order " + std::to_string(order) + " exceeds the cap " + std::to_string(max_order()) +
                                " (set SCATTER_MAX_ORDER to raise it)");
    return order;
}

json count_json(const ToricModel& X, std::int64_t p, std::int64_t q, std::optional<int> order)
{
    int need = required_order(X, p, q);
    checked_order(order.value_or(need));
    CountResult r = count_N(X, p, q, order);
    json j;
    j["surface"] = X.name;
    j["p"] = p;
    j["q"] = q;
    j["wp"] = vec(r.wp);
    j["nu"] = r.nu;
    j["phi"] = r.phi ? vec(*r.phi) : json(nullptr);
    j["order"] = r.required_order;
    j["coef_poly"] = poly(r.coef);
    j["N"] = integer(r.N);
    j["reason"] = to_string(r.reason);
    j["experimental"] = r.experimental;
    return j;
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

struct Options {
    // scatter
    std::vector<int> l;
    std::vector<std::string> dirs;
    std::optional<int> order;
    std::string out_path;
    std::string in_path;
    // surfaces / pairs
    std::string surface;
    std::int64_t p = 0, q = 0;
    int max_sum = 0;
    int jobs = 1;
    // embed
    std::string a;
    std::vector<std::string> table;
    // orbit / reduce
    int K = 7;
    std::string x;
    int steps = 4;
    std::string map = "S";
    std::int64_t delta = 0;
    bool seeds = false;
};

int do_scatter(const Options& o, std::ostream& out)
{
    if (o.dirs.size() != o.l.size())
        throw PreconditionError("--l and --dirs need the same number of entries");
    std::vector<LatticeVector> dirs;
    for (const auto& s : o.dirs)
        dirs.push_back(parse_vector(s));
    int K = checked_order(o.order.value_or(kDefaultOrder));
    ScatteringDiagram d = complete(make_basic(dirs, o.l, K));
    std::string text = diagram_to_json(d, 2) + "\n";
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f)
            throw PreconditionError("cannot write " + o.out_path);
        f << text;
    }
    return 0;
}

// Loads a diagram file and verifies its loop monodromy; a nontrivial loop is an inconsistency (exit 3).
int do_check(const Options& o, std::ostream& out)
{
    std::ifstream f(o.in_path, std::ios::binary);
    if (!f)
        throw PreconditionError("cannot read " + o.in_path);
    std::stringstream buf;
    buf << f.rdbuf();
    ScatteringDiagram d = diagram_from_json(buf.str());
    checked_order(d.order());
    MonodromyLogs l = loop_monodromy_logs(d);
    if (!l.lx.is_zero() || !l.ly.is_zero()) {
        int k = d.order() + 1;
        for (const auto* s : {&l.lx, &l.ly})
            if (!s->is_zero())
                k = std::min(k, s->terms().begin()->first.k);
        throw ConsistencyError("loop monodromy is not the identity at order " + std::to_string(k));
    }
    json j;
    j["order"] = d.order();
    j["walls"] = d.walls().size();
    j["consistent"] = true;
    emit(out, j);
    return 0;
}

int do_count(const Options& o, std::ostream& out)
{
    const ToricModel& X = model(parse_surface(o.surface));
    if (o.max_sum <= 0) {
        emit(out, count_json(X, o.p, o.q, o.order));
        return 0;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t s = 2; s <= o.max_sum; ++s)
        for (std::int64_t p = s - 1; p >= 1; --p)
            if (std::gcd(p, s - p) == 1)
                pairs.push_back({p, s - p});
    // warm the shared completion with the most expensive query first
    std::size_t heavy = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (required_order(X, pairs[i].first, pairs[i].second) >
            required_order(X, pairs[heavy].first, pairs[heavy].second))
            heavy = i;
    std::vector<json> results(pairs.size());
    std::vector<std::exception_ptr> errors(pairs.size());
    results[heavy] = count_json(X, pairs[heavy].first, pairs[heavy].second, o.order);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < pairs.size();) {
            if (i == heavy)
                continue;
            try {
                results[i] = count_json(X, pairs[i].first, pairs[i].second, o.order);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int jobs = std::max(1, o.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    emit(out, json(results));
    return 0;
}

int do_exists(const Options& o, std::ostream& out)
{
    const ToricModel& X = model(parse_surface(o.surface));
    Existence e = exists_wp_curve(X, o.p, o.q);
    json j;
    j["surface"] = X.name;
    j["p"] = o.p;
    j["q"] = o.q;
    j["wp"] = vec(e.wp);
    j["phi"] = e.phi ? vec(*e.phi) : json(nullptr);
    j["exists"] = e.exists;
    j["reason"] = to_string(e.reason);
    emit(out, j);
    return 0;
}

int do_embed(const Options& o, std::ostream& out)
{
    if (!o.table.empty()) {
        if (o.table.size() != 3)
            throw PreconditionError("--table needs a_min a_max n");
        int n = 0;
        try {
            n = std::stoi(o.table[2]);
        } catch (const std::logic_error&) {
            throw PreconditionError("sample count must be an integer");
        }
        out << staircase_csv(staircase_table(parse_rational(o.table[0]), parse_rational(o.table[1]), n));
        return 0;
    }
    if (o.a.empty())
        throw PreconditionError("embed needs --a or --table");
    Rational a = parse_rational(o.a);
    EmbedValue v = c_ball_stab(a);
    json j;
    j["a"] = to_string(a);
    j["c"] = to_string(v.c);
    j["regime"] = v.regime == Regime::Folding ? "folding"
                  : v.regime == Regime::StepSlope ? "step-slope"
                                                  : "step-plateau";
    if (v.regime != Regime::Folding)
        j["k"] = v.k;
    j["breakpoint"] = v.breakpoint;
    emit(out, j);
    return 0;
}

int do_dmin(const Options& o, std::ostream& out)
{
    DminResult r = d_min_certified(o.p, o.q);
    json j;
    j["p"] = o.p;
    j["q"] = o.q;
    j["d"] = r.value;
    j["delta"] = to_string(r.delta);
    j["certified"] = r.certified;
    emit(out, j);
    return 0;
}

int do_orbit(const Options& o, std::ostream& out)
{
    if (o.x.empty())
        throw PreconditionError("orbit needs --x");
    Rational x = parse_rational(o.x);
    json arr = json::array({to_string(x)});
    for (int i = 0; i < o.steps; ++i) {
        if (o.map == "S")
            x = S_map(o.K, x);
        else if (o.map == "R")
            x = R_map(o.K, x);
        else
            throw PreconditionError("--map must be S or R");
        arr.push_back(to_string(x));
    }
    json j;
    j["K"] = o.K;
    j["map"] = o.map;
    j["orbit"] = arr;
    emit(out, j);
    return 0;
}

int do_reduce(const Options& o, std::ostream& out)
{
    if (o.seeds) {
        const ToricModel& X = model(parse_surface(o.surface));
        json arr = json::array();
        for (auto [p, q] : seed_pairs(X.id))
            arr.push_back(json::array({p, q}));
        json j;
        j["surface"] = X.name;
        j["K"] = X.K;
        j["J"] = X.J();
        j["seeds"] = arr;
        emit(out, j);
        return 0;
    }
    SeedResult r = seed_reduce(o.K, o.p, o.q, o.delta);
    json j;
    j["K"] = o.K;
    j["p"] = o.p;
    j["q"] = o.q;
    j["delta"] = o.delta;
    j["p0"] = r.p0;
    j["q0"] = r.q0;
    j["steps"] = r.steps;
    j["seed"] = r.is_seed;
    emit(out, j);
    return 0;
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message)
{
    json j;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
}

} // namespace

int max_order()
{
    if (const char* env = std::getenv("SCATTER_MAX_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v >= 0)
                return v;
        } catch (const std::logic_error&) {
        }
    }
    return kDefaultMaxOrder;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scattering diagrams, well-placed curve counts and the stabilized embedding function"};
    app.require_subcommand(1);
    Options o;

    auto* scatter = app.add_subcommand("scatter", "complete a basic scattering diagram");
    scatter->add_option("--l", o.l, "multiplicities")->required();
    scatter->add_option("--dirs", o.dirs, "primitive directions a,b")->required();
    scatter->add_option("--order", o.order, "truncation order (default 12)");
    scatter->add_option("--out", o.out_path, "write JSON here instead of stdout");

    auto* check = app.add_subcommand("check", "verify that a diagram file has trivial loop monodromy");
    check->add_option("--in", o.in_path, "diagram JSON")->required();

    auto* count = app.add_subcommand("count", "curve count N(p,q)");
    count->add_option("--surface", o.surface)->required();
    count->add_option("--p", o.p);
    count->add_option("--q", o.q);
    count->add_option("--order", o.order, "truncation order (defaults to the required one)");
    count->add_option("--max-sum", o.max_sum, "sweep all coprime p+q <= N");
    count->add_option("--jobs", o.jobs, "threads for --max-sum");

    auto* exists = app.add_subcommand("exists", "existence classification");
    exists->add_option("--surface", o.surface)->required();
    exists->add_option("--p", o.p)->required();
    exists->add_option("--q", o.q)->required();

    auto* embed = app.add_subcommand("embed", "stabilized ellipsoid embedding function");
    embed->add_option("--a", o.a, "num/den");
    embed->add_option("--table", o.table, "a_min a_max n")->expected(3);

    auto* dmin = app.add_subcommand("dmin", "minimal degree certification in CP2");
    dmin->add_option("--p", o.p)->required();
    dmin->add_option("--q", o.q)->required();

    auto* orbit = app.add_subcommand("orbit", "iterate S_X or R_X");
    orbit->add_option("--K", o.K);
    orbit->add_option("--x", o.x)->required();
    orbit->add_option("--steps", o.steps);
    orbit->add_option("--map", o.map);

    auto* reduce = app.add_subcommand("reduce", "seed reduction by mutation");
    reduce->add_option("--K", o.K);
    reduce->add_option("--p", o.p);
    reduce->add_option("--q", o.q);
    reduce->add_option("--delta", o.delta);
    reduce->add_flag("--seeds", o.seeds, "list the seed pairs of --surface");
    reduce->add_option("--surface", o.surface);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", e.what());
        return 2;
    }

    try {
        if (*scatter)
            return do_scatter(o, out);
        if (*check)
            return do_check(o, out);
        if (*count)
            return do_count(o, out);
        if (*exists)
            return do_exists(o, out);
        if (*embed)
            return do_embed(o, out);
        if (*dmin)
            return do_dmin(o, out);
        if (*orbit)
            return do_orbit(o, out);
        if (*reduce)
            return do_reduce(o, out);
    } catch (const PreconditionError& e) {
        error_json(err, "precondition", e.what());
        return 2;
    } catch (const ConsistencyError& e) {
        error_json(err, "inconsistency", e.what());
        return 3;
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return 3;
    }
    return 2;
}

} // namespace scatlab::cli
