#include "dsbvp/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "dsbvp/errors.hpp"
#include "dsbvp/expr.hpp"

namespace dsbvp {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

struct Entry {
    std::string value;
    int line;
};

constexpr const char* kKnownKeys[] = {
    "p", "p_prime", "q", "f", "f_y", "bc.kind", "bc.alpha", "bc.beta",
    "bc.gamma", "guard",
};

bool known_key(const std::string& key) {
    for (const char* k : kKnownKeys) {
        if (key == k) {
            return true;
        }
    }
    return false;
}

Expr parse_expr_field(const Entry& e, const std::string& field, bool allow_x,
                      bool allow_y) {
    Expr expr;
    try {
        expr = Expr::parse(e.value);
    } catch (const ExpressionError& err) {
        throw ParseError(err.what(), e.line, field);
    }
    if (!allow_x && expr.uses_x()) {
        throw ParseError("'" + field + "' must not depend on x", e.line, field);
    }
    if (!allow_y && expr.uses_y()) {
        throw ParseError("'" + field + "' must not depend on y", e.line, field);
    }
    return expr;
}

double parse_const_field(const Entry& e, const std::string& field) {
    const Expr expr = parse_expr_field(e, field, false, false);
    return expr.eval(0.0, 0.0);
}

}  // namespace

ProblemSpec parse_problem(std::istream& in) {
    std::map<std::string, Entry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        const size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", lineno, "");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("missing key before '='", lineno, "");
        }
        if (!known_key(key)) {
            throw ParseError("unknown key '" + key + "'", lineno, key);
        }
        if (entries.count(key)) {
            throw ParseError("duplicate key '" + key + "' (first on line " +
                                 std::to_string(entries[key].line) + ")",
                             lineno, key);
        }
        if (value.empty()) {
            throw ParseError("empty value for '" + key + "'", lineno, key);
        }
        entries[key] = Entry{value, lineno};
    }

    auto require = [&](const std::string& key) -> const Entry& {
        const auto it = entries.find(key);
        if (it == entries.end()) {
            throw ParseError("missing required key '" + key + "'", 0, key);
        }
        return it->second;
    };

    ProblemSpec spec;

    const Expr p = parse_expr_field(require("p"), "p", true, false);
    spec.p = [p](double x) { return p.eval(x, 0.0); };
    if (entries.count("p_prime")) {
        const Expr pp = parse_expr_field(entries["p_prime"], "p_prime", true, false);
        spec.p_prime = [pp](double x) { return pp.eval(x, 0.0); };
    } else {
        spec.p_prime = finite_difference_derivative(spec.p);
    }
    const Expr q = parse_expr_field(require("q"), "q", true, false);
    spec.q = [q](double x) { return q.eval(x, 0.0); };
    const Expr f = parse_expr_field(require("f"), "f", true, true);
    spec.f = [f](double x, double y) { return f.eval(x, y); };
    const Expr fy = parse_expr_field(require("f_y"), "f_y", true, true);
    spec.f_y = [fy](double x, double y) { return fy.eval(x, y); };
    if (entries.count("guard")) {
        const Expr g = parse_expr_field(entries["guard"], "guard", false, true);
        spec.domain_guard = [g](double y) { return g.eval(0.0, y); };
    }

    const Entry& kind = require("bc.kind");
    const double alpha = parse_const_field(require("bc.alpha"), "bc.alpha");
    const double beta = parse_const_field(require("bc.beta"), "bc.beta");
    if (kind.value == "dirichlet") {
        if (entries.count("bc.gamma")) {
            throw ParseError("'bc.gamma' has no meaning for dirichlet conditions",
                             entries["bc.gamma"].line, "bc.gamma");
        }
        spec.bc = DirichletBC{alpha, beta};
    } else if (kind.value == "neumann_robin") {
        const double gamma = parse_const_field(require("bc.gamma"), "bc.gamma");
        if (alpha == 0.0) {
            throw ParseError("'bc.alpha' must be nonzero for mixed conditions",
                             entries["bc.alpha"].line, "bc.alpha");
        }
        spec.bc = NeumannRobinBC{alpha, beta, gamma};
    } else {
        throw ParseError("bc.kind must be 'dirichlet' or 'neumann_robin', got '" +
                             kind.value + "'",
                         kind.line, "bc.kind");
    }
    return spec;
}

ProblemSpec parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'", 0, "");
    }
    return parse_problem(in);
}

}  // namespace dsbvp
