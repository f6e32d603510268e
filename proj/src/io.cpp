#include "morlab/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "morlab/exponents.hpp"

namespace morlab {

namespace {

void write_header(std::ostream& os, const Grid& g) {
    os << std::setprecision(17);
    os << "# n=" << g.dim() << "\n";
    os << "# lower=" << g.lower()[0];
    if (g.dim() == 2) os << "," << g.lower()[1];
    os << "\n# upper=" << g.upper()[0];
    if (g.dim() == 2) os << "," << g.upper()[1];
    os << "\n# h=" << g.spacing() << "\n";
}

struct Header {
    int n = 0;
    Vec2 lower{0, 0}, upper{0, 0};
    double h = 0;
    std::optional<double> p_inf;
};

Vec2 parse_pair(const std::string& s, int n) {
    Vec2 v{0, 0};
    std::istringstream is(s);
    char comma;
    is >> v[0];
    if (n == 2) is >> comma >> v[1];
    if (is.fail()) throw std::invalid_argument("malformed CSV header value: " + s);
    return v;
}

Header read_header(std::istream& is, std::vector<std::string>& body) {
    Header hd;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            std::string val = line.substr(eq + 1);
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t") + 1);
            if (key == "n") hd.n = std::stoi(val);
            else if (key == "lower") hd.lower = parse_pair(val, 2 - (val.find(',') == std::string::npos));
            else if (key == "upper") hd.upper = parse_pair(val, 2 - (val.find(',') == std::string::npos));
            else if (key == "h") hd.h = std::stod(val);
            else if (key == "p_inf") hd.p_inf = std::stod(val);
        } else {
            body.push_back(line);
        }
    }
    if (hd.n == 0 || hd.h == 0) throw std::invalid_argument("missing CSV header fields");
    return hd;
}

}  // namespace

void write_gridfunction_csv(const std::string& path, const GridFunction& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_header(os, f.grid());
    os << std::setprecision(17);
    for (double v : f.values()) os << v << "\n";
}

GridFunction read_gridfunction_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::vector<std::string> body;
    Header hd = read_header(is, body);
    Grid g(hd.n, hd.lower, hd.upper, hd.h);
    std::vector<double> vals;
    vals.reserve(body.size());
    for (const std::string& s : body) vals.push_back(std::stod(s));
    return GridFunction(g, std::move(vals));
}

void write_exponent_csv(const std::string& path, const ExponentField& p) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_header(os, p.grid());
    if (p.p_at_infinity()) os << "# p_inf=" << std::setprecision(17) << *p.p_at_infinity() << "\n";
    os << std::setprecision(17);
    for (double v : p.values()) {
        if (std::isinf(v))
            os << "inf\n";
        else
            os << v << "\n";
    }
}

ExponentField read_exponent_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::vector<std::string> body;
    Header hd = read_header(is, body);
    Grid g(hd.n, hd.lower, hd.upper, hd.h);
    std::vector<double> vals;
    vals.reserve(body.size());
    for (const std::string& s : body) {
        if (s == "inf" || s == "Inf" || s == "INF")
            vals.push_back(std::numeric_limits<double>::infinity());
        else
            vals.push_back(std::stod(s));
    }
    return ExponentField(g, std::move(vals), hd.p_inf);
}

}  // namespace morlab
