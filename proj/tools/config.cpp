#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace fracwos::cli {

using nlohmann::json;

namespace {

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
    return v;
}

std::uint64_t get_count(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !(j.is_number() && std::floor(j.get<double>()) == j.get<double>()))
        throw ConfigError(path, "expected a non-negative integer");
    const double v = j.get<double>();
    if (v < 0.0) throw ConfigError(path, "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> get_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw ConfigError(join(path, it.key()), "unknown key");
}

FieldSpec parse_field(const json& j, const std::string& path) {
    FieldSpec f;
    if (j.is_string()) {
        f.name = j.get<std::string>();
    } else if (j.is_object()) {
        reject_unknown(j, {"name", "params"}, path);
        if (!j.contains("name") || !j["name"].is_string()) throw ConfigError(join(path, "name"), "expected a function name");
        f.name = j["name"].get<std::string>();
        if (j.contains("params")) {
            const json& p = j["params"];
            const std::string pp = join(path, "params");
            if (!p.is_object()) throw ConfigError(pp, "expected an object");
            reject_unknown(p, {"c", "x_prime"}, pp);
            if (p.contains("c")) f.c = get_number(p["c"], join(pp, "c"));
            if (p.contains("x_prime")) f.x_prime = get_vector(p["x_prime"], join(pp, "x_prime"));
        }
    } else {
        throw ConfigError(path, "expected a function name or {name, params}");
    }
    const auto& names = registered_field_names();
    if (std::find(names.begin(), names.end(), f.name) == names.end())
        throw ConfigError(join(path, "name"), "unknown function '" + f.name + "'");
    if (f.name == "constant" && !f.c) throw ConfigError(join(path, "params.c"), "required by 'constant'");
    if ((f.name == "example1_g" || f.name == "example2_g") && !f.x_prime)
        throw ConfigError(join(path, "params.x_prime"), "required by '" + f.name + "'");
    return f;
}

}  // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("$", "configuration must be a JSON object");
    reject_unknown(doc,
                   {"dimension", "s", "domain", "boundary", "source", "exact", "points", "samples", "seed", "max_steps",
                    "threads", "output", "n0"},
                   "");
    RunConfig c;
    if (!doc.contains("dimension")) throw ConfigError("dimension", "required");
    const std::uint64_t n = get_count(doc["dimension"], "dimension");
    if (n < 1 || n > 1000) throw ConfigError("dimension", "must lie in [1, 1000]");
    c.dimension = static_cast<int>(n);
    if (!doc.contains("s")) throw ConfigError("s", "required");
    c.s = get_number(doc["s"], "s");
    if (!(c.s > 0.0 && c.s < 1.0)) throw ConfigError("s", "must lie in (0, 1)");

    c.domain.center.assign(static_cast<std::size_t>(c.dimension), 0.0);
    if (doc.contains("domain")) {
        const json& d = doc["domain"];
        if (!d.is_object()) throw ConfigError("domain", "expected an object");
        reject_unknown(d, {"type", "center", "radius", "lo", "hi"}, "domain");
        if (!d.contains("type") || !d["type"].is_string()) throw ConfigError("domain.type", "expected \"ball\" or \"box\"");
        c.domain.type = d["type"].get<std::string>();
        if (c.domain.type == "ball") {
            if (d.contains("center")) c.domain.center = get_vector(d["center"], "domain.center");
            if (d.contains("radius")) c.domain.radius = get_number(d["radius"], "domain.radius");
            if (c.domain.center.size() != n) throw ConfigError("domain.center", "length must equal dimension");
            if (!(c.domain.radius > 0.0)) throw ConfigError("domain.radius", "must be positive");
        } else if (c.domain.type == "box") {
            if (!d.contains("lo")) throw ConfigError("domain.lo", "required for a box");
            if (!d.contains("hi")) throw ConfigError("domain.hi", "required for a box");
            c.domain.lo = get_vector(d["lo"], "domain.lo");
            c.domain.hi = get_vector(d["hi"], "domain.hi");
            if (c.domain.lo.size() != n) throw ConfigError("domain.lo", "length must equal dimension");
            if (c.domain.hi.size() != n) throw ConfigError("domain.hi", "length must equal dimension");
            for (std::size_t i = 0; i < n; ++i)
                if (!(c.domain.lo[i] < c.domain.hi[i]))
                    throw ConfigError("domain.hi[" + std::to_string(i) + "]", "must exceed domain.lo");
        } else {
            throw ConfigError("domain.type", "expected \"ball\" or \"box\"");
        }
    }

    if (doc.contains("boundary")) c.boundary = parse_field(doc["boundary"], "boundary");
    if (doc.contains("source")) c.source = parse_field(doc["source"], "source");
    if (doc.contains("exact")) c.exact = parse_field(doc["exact"], "exact");
    for (const FieldSpec* f : {&c.boundary, &c.source})
        if (f->x_prime && f->x_prime->size() != n)
            throw ConfigError(std::string(f == &c.boundary ? "boundary" : "source") + ".params.x_prime",
                              "length must equal dimension");
    if (c.exact && c.exact->x_prime && c.exact->x_prime->size() != n)
        throw ConfigError("exact.params.x_prime", "length must equal dimension");

    if (!doc.contains("points")) throw ConfigError("points", "required");
    if (!doc["points"].is_array() || doc["points"].empty()) throw ConfigError("points", "expected a non-empty array of points");
    const Domain dom = make_domain(c);
    for (std::size_t i = 0; i < doc["points"].size(); ++i) {
        const std::string path = "points[" + std::to_string(i) + "]";
        const std::vector<double> v = get_vector(doc["points"][i], path);
        if (v.size() != n) throw ConfigError(path, "length must equal dimension");
        Point p(v);
        if (!contains(dom, p)) throw ConfigError(path, "point lies outside the domain");
        c.points.push_back(std::move(p));
    }

    if (doc.contains("samples")) c.samples = get_count(doc["samples"], "samples");
    if (c.samples < 2) throw ConfigError("samples", "must be at least 2");
    if (doc.contains("seed")) c.seed = get_count(doc["seed"], "seed");
    if (doc.contains("max_steps")) c.max_steps = get_count(doc["max_steps"], "max_steps");
    if (c.max_steps < 1) throw ConfigError("max_steps", "must be at least 1");
    if (doc.contains("threads")) {
        const std::uint64_t t = get_count(doc["threads"], "threads");
        if (t < 1 || t > 4096) throw ConfigError("threads", "must lie in [1, 4096]");
        c.threads = static_cast<int>(t);
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) throw ConfigError("output", "expected a path string");
        c.output = doc["output"].get<std::string>();
    }
    if (doc.contains("n0")) {
        const std::uint64_t v = get_count(doc["n0"], "n0");
        if (v < 2 || v > 1u << 20) throw ConfigError("n0", "must lie in [2, 2^20]");
        c.n0 = static_cast<int>(v);
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("$", "cannot open configuration file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

Domain make_domain(const RunConfig& cfg) {
    if (cfg.domain.type == "box") return Domain::box(Point(cfg.domain.lo), Point(cfg.domain.hi));
    return Domain::ball(Point(cfg.domain.center), cfg.domain.radius);
}

NamedField make_named_field(const FieldSpec& f, int n, double s) {
    FieldParams p;
    p.n = n;
    p.s = s;
    p.c = f.c;
    if (f.x_prime) p.x_prime = Point(*f.x_prime);
    return make_field(f.name, p);
}

ProblemSpec make_problem(const RunConfig& cfg, double s) {
    ProblemSpec p;
    p.n = cfg.dimension;
    p.s = s;
    p.domain = make_domain(cfg);
    p.boundary = make_named_field(cfg.boundary, cfg.dimension, s);
    p.source = make_named_field(cfg.source, cfg.dimension, s);
    if (cfg.exact) p.exact = make_named_field(*cfg.exact, cfg.dimension, s);
    p.max_steps = cfg.max_steps;
    return p;
}

int parse_grid_count(const std::string& text) {
    double h = 0.0;
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash));
            const double den = std::stod(text.substr(slash + 1));
            h = num / den;
        } else {
            h = std::stod(text);
        }
    } catch (const std::exception&) {
        throw ConfigError("--h", "expected a step size such as 1/64");
    }
    if (!(h > 0.0 && h <= 0.5)) throw ConfigError("--h", "step size must lie in (0, 1/2]");
    const double N = std::round(1.0 / h);
    if (std::fabs(N * h - 1.0) > 1e-9) throw ConfigError("--h", "step size must be the reciprocal of an integer");
    return static_cast<int>(N);
}

}  // namespace fracwos::cli
