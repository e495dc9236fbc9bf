#include "mmsp/presets.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mmsp {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<Preset> load_presets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open preset file: " + path);

    std::vector<Preset> presets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::runtime_error(path + ": malformed section header at line " +
                                         std::to_string(lineno));
            Preset pr;
            pr.name = trim(t.substr(1, t.size() - 2));
            presets.push_back(pr);
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || presets.empty())
            throw std::runtime_error(path + ": expected key = value at line " +
                                     std::to_string(lineno));
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        double x;
        if (key != "name") {
            std::istringstream vs(val);
            if (!(vs >> x))
                throw std::runtime_error(path + ": bad numeric value at line " +
                                         std::to_string(lineno));
        }
        Preset& pr = presets.back();
        if (key == "name")
            pr.name = val;
        else if (key == "v0")
            pr.params.v0 = x;
        else if (key == "a_coef")
            pr.params.a_coef = x;
        else if (key == "b_coef")
            pr.params.b_coef = x;
        else if (key == "alpha")
            pr.params.alpha = x;
        else if (key == "mu")
            pr.ctx.mu = x;
        else if (key == "hbar")
            pr.ctx.hbar = x;
        else
            throw std::runtime_error(path + ": unknown key '" + key + "' at line " +
                                     std::to_string(lineno));
    }
    return presets;
}

Preset find_preset(const std::string& path, const std::string& name) {
    for (const auto& pr : load_presets(path))
        if (pr.name == name) return pr;
    throw std::runtime_error("preset '" + name + "' not found in " + path);
}

}  // namespace mmsp
