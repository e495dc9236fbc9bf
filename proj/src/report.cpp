#include "mmsp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mmsp/errors.hpp"
#include "mmsp/oracle.hpp"
#include "mmsp/spectrum.hpp"

namespace mmsp {

void RunConfig::validate() const {
    params.validate();
    ctx.validate();
    if (schemes.empty()) throw std::invalid_argument("at least one scheme required");
    if (n_limit < 0) throw std::invalid_argument("n_limit must be >= 0");
    for (int l : l_list)
        if (l < 0) throw std::invalid_argument("l must be >= 0");
}

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

// One table cell; `empty` renders as a blank CSV field / JSON null.
struct Cell {
    enum class Kind { Integer, Number, Boolean, Text, Empty } kind = Kind::Empty;
    long long i = 0;
    double num = 0.0;
    bool b = false;
    std::string text;

    static Cell integer(long long v) { return {Kind::Integer, v, 0.0, false, {}}; }
    static Cell number(double v) { return {Kind::Number, 0, v, false, {}}; }
    static Cell boolean(bool v) { return {Kind::Boolean, 0, 0.0, v, {}}; }
    static Cell str(std::string v) { return {Kind::Text, 0, 0.0, false, std::move(v)}; }
    static Cell empty() { return {}; }
};

std::string render_cell_csv(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Integer: return std::to_string(c.i);
        case Cell::Kind::Number: return format_double(c.num);
        case Cell::Kind::Boolean: return c.b ? "true" : "false";
        case Cell::Kind::Text: return c.text;
        case Cell::Kind::Empty: return "";
    }
    return "";
}

std::string render_cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Integer: return std::to_string(c.i);
        case Cell::Kind::Number: return format_double(c.num);
        case Cell::Kind::Boolean: return c.b ? "true" : "false";
        case Cell::Kind::Text: return "\"" + c.text + "\"";
        case Cell::Kind::Empty: return "null";
    }
    return "null";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& t, OutputFormat fmt) {
    std::string out;
    if (fmt == OutputFormat::Csv) {
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            if (i) out += ',';
            out += t.header[i];
        }
        out += '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += render_cell_csv(row[i]);
            }
            out += '\n';
        }
    } else {
        out += "[";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            out += r ? ",\n " : "\n ";
            out += "{";
            for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
                if (i) out += ", ";
                out += "\"" + t.header[i] + "\": " + render_cell_json(t.rows[r][i]);
            }
            out += "}";
        }
        out += "\n]\n";
    }
    return out;
}

// Rendered output is buffered in full, so an error exit never leaves a
// partial file behind.
int emit(const Table& t, const RunConfig& cfg, std::ostream& diag) {
    const std::string body = render(t, cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << body;
        return std::cout ? kExitOk : kExitIoError;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        diag << "error: cannot open output file: " << cfg.out_path << "\n";
        return kExitIoError;
    }
    out << body;
    out.flush();
    if (!out) {
        diag << "error: failed writing output file: " << cfg.out_path << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

std::vector<int> sorted_l(const RunConfig& cfg) {
    std::vector<int> ls = cfg.l_list;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

std::vector<ApproximationScheme> sorted_schemes(const RunConfig& cfg) {
    auto schemes = cfg.schemes;
    std::sort(schemes.begin(), schemes.end(),
              [](const ApproximationScheme& a, const ApproximationScheme& b) {
                  return std::string(a.name()) < std::string(b.name());
              });
    return schemes;
}

RadialGridSpec oracle_grid(const RunConfig& cfg) {
    RadialGridSpec g = RadialGridSpec::default_for(cfg.params);
    if (cfg.r_max > 0.0) g.r_max = cfg.r_max;
    g.points = cfg.grid_points;
    return g;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& diag) {
    cfg.validate();
    Table t;
    t.header = {"n", "l", "scheme", "energy", "chi", "s_exponent", "valid"};
    try {
        for (int l : sorted_l(cfg)) {
            // Enumerate per scheme first; rows are then interleaved n-major.
            std::vector<SpectrumEnumeration> per_scheme;
            const auto schemes = sorted_schemes(cfg);
            for (const auto& sch : schemes)
                per_scheme.push_back(
                    enumerate_spectrum(cfg.params, cfg.ctx, l, sch, cfg.n_limit));
            for (int n = 0; n <= cfg.n_limit; ++n) {
                for (std::size_t s = 0; s < schemes.size(); ++s) {
                    const SpectrumRecord& rec = per_scheme[s].records[n];
                    t.rows.push_back({Cell::integer(n), Cell::integer(l),
                                      Cell::str(rec.scheme.name()), Cell::number(rec.energy),
                                      Cell::number(rec.chi), Cell::number(rec.s_exponent),
                                      Cell::boolean(rec.validity.valid)});
                }
            }
        }
    } catch (const SupercriticalError& e) {
        diag << "error: supercritical potential (quantum fall to center): " << e.what()
             << "\n";
        return kExitSupercritical;
    }
    return emit(t, cfg, diag);
}

int cmd_compare(const RunConfig& cfg, std::ostream& diag) {
    cfg.validate();
    if (!cfg.oracle_enabled) {
        diag << "error: compare requires --oracle\n";
        return kExitUsage;
    }
    Table t;
    t.header = {"n", "l", "scheme", "e_closed", "e_oracle", "abs_err", "rel_err", "conv_gap"};
    try {
        for (int l : sorted_l(cfg)) {
            const OracleResult oracle =
                oracle_solve(cfg.params, cfg.ctx, l, oracle_grid(cfg), cfg.n_limit + 1);
            const int n_avail =
                std::min<int>(cfg.n_limit + 1, static_cast<int>(oracle.energies.size()));
            for (int n = 0; n < n_avail; ++n) {
                for (const auto& sch : sorted_schemes(cfg)) {
                    const SpectrumRecord rec = energy_level(cfg.params, cfg.ctx, {n, l}, sch);
                    const double e_oracle = oracle.richardson_estimate[n];
                    const double abs_err = std::abs(rec.energy - e_oracle);
                    t.rows.push_back({Cell::integer(n), Cell::integer(l),
                                      Cell::str(sch.name()), Cell::number(rec.energy),
                                      Cell::number(e_oracle), Cell::number(abs_err),
                                      Cell::number(abs_err / std::abs(e_oracle)),
                                      Cell::number(oracle.convergence_gap[n])});
                }
            }
        }
    } catch (const SupercriticalError& e) {
        diag << "error: supercritical potential (quantum fall to center): " << e.what()
             << "\n";
        return kExitSupercritical;
    } catch (const NoBoundLevelsError& e) {
        diag << "error: no bound levels below the continuum edge: " << e.what() << "\n";
        return kExitNoBoundLevels;
    }
    return emit(t, cfg, diag);
}

int cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& diag) {
    cfg.validate();
    if (sweep.steps < 2) {
        diag << "error: sweep requires --steps >= 2\n";
        return kExitUsage;
    }
    if (!(sweep.hi > sweep.lo)) {
        diag << "error: sweep range must have positive length\n";
        return kExitUsage;
    }
    Table t;
    t.header = {"axis_value", "n", "l", "scheme", "energy", "valid"};
    for (int i = 0; i < sweep.steps; ++i) {
        const double x = sweep.lo + (sweep.hi - sweep.lo) * i / (sweep.steps - 1);
        PotentialParams p = cfg.params;
        switch (sweep.axis) {
            case SweepSpec::Axis::V0: p.v0 = x; break;
            case SweepSpec::Axis::Alpha: p.alpha = x; break;
            case SweepSpec::Axis::A: p.a_coef = x; break;
            case SweepSpec::Axis::B: p.b_coef = x; break;
        }
        for (int l : sorted_l(cfg)) {
            for (int n = 0; n <= cfg.n_limit; ++n) {
                for (const auto& sch : sorted_schemes(cfg)) {
                    Cell energy = Cell::empty();
                    bool valid = false;
                    try {
                        const auto en = enumerate_spectrum(p, cfg.ctx, l, sch, cfg.n_limit);
                        const SpectrumRecord& rec = en.records[n];
                        valid = rec.validity.valid;
                        if (valid) energy = Cell::number(rec.energy);
                    } catch (const SupercriticalError&) {
                        // supercritical point: row stays valid=false, empty energy
                    } catch (const std::invalid_argument&) {
                        // e.g. alpha swept to a non-positive value
                    }
                    t.rows.push_back({Cell::number(x), Cell::integer(n), Cell::integer(l),
                                      Cell::str(sch.name()), energy, Cell::boolean(valid)});
                }
            }
        }
    }
    return emit(t, cfg, diag);
}

}  // namespace mmsp
