#include "pcenter/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcenter {

double lb0(const Instance& inst) {
    double worst = 0.0;
    for (int i = 0; i < inst.n_clients(); ++i) {
        auto row = inst.row(i);
        worst = std::max(worst, *std::min_element(row.begin(), row.end()));
    }
    return worst;
}

double ub0(const Instance& inst) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < inst.n_facilities(); ++j) {
        double reach = 0.0;
        for (int i = 0; i < inst.n_clients(); ++i) reach = std::max(reach, inst.distance(i, j));
        best = std::min(best, reach);
    }
    return best;
}

Bounds initial_bounds(const Instance& inst) {
    return {lb0(inst), ub0(inst), BoundProvenance::lb0ub0};
}

Bounds snap_to_ladder(const Bounds& b, const DistanceLadder& ladder) {
    if (b.lb > b.ub) throw std::invalid_argument("bounds invert: lb > ub");
    const double top = ladder.value(ladder.max_rank());
    if (b.lb > top)
        throw std::invalid_argument("lower bound exceeds the largest distance");
    Bounds out = b;
    out.lb = next_distance_at_least(ladder, b.lb);
    out.ub = b.ub >= top ? top : next_distance_at_least(ladder, b.ub);
    out.ub = std::max(out.ub, out.lb);
    return out;
}

Instance clamp_distances(const Instance& inst, const Bounds& b) {
    if (b.lb > b.ub) throw std::invalid_argument("bounds invert: lb > ub");
    auto d = inst.distances();
    std::vector<double> clamped(d.begin(), d.end());
    for (auto& x : clamped) {
        if (x < b.lb)
            x = b.lb;
        else if (x > b.ub)
            x = b.ub + 1.0;
    }
    return inst.with_distances(std::move(clamped));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

double csv_number(const std::string& f, int lineno) {
    try {
        std::size_t used = 0;
        double v = std::stod(f, &used);
        if (used != f.size()) throw std::invalid_argument(f);
        return v;
    } catch (const std::exception&) {
        throw ParseError("fixture line " + std::to_string(lineno) + ": bad number '" + f + "'");
    }
}

} // namespace

FixtureTable FixtureTable::parse(std::string_view csv) {
    FixtureTable table;
    std::istringstream is{std::string(csv)};
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv_line(line);
        if (!saw_header) {
            if (fields != std::vector<std::string>{"instance", "n", "p", "opt", "lb", "ub"})
                throw ParseError("fixture header must be 'instance,n,p,opt,lb,ub'");
            saw_header = true;
            continue;
        }
        if (fields.size() != 6)
            throw ParseError("fixture line " + std::to_string(lineno) + ": expected 6 fields, got " +
                             std::to_string(fields.size()));
        FixtureRow row;
        row.instance = fields[0];
        row.n = static_cast<int>(csv_number(fields[1], lineno));
        row.p = static_cast<int>(csv_number(fields[2], lineno));
        row.opt = csv_number(fields[3], lineno);
        row.lb = csv_number(fields[4], lineno);
        row.ub = csv_number(fields[5], lineno);
        table.rows_.push_back(std::move(row));
    }
    if (!saw_header) throw ParseError("fixture file is empty");
    return table;
}

FixtureTable FixtureTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const FixtureRow* FixtureTable::find(std::string_view instance) const {
    for (const auto& row : rows_)
        if (row.instance == instance) return &row;
    return nullptr;
}

} // namespace pcenter
