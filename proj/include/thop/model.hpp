#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace thop {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class EdgeWeightType { Ceil2D, Explicit };

struct Item {
    int id = 0;             // 1-based
    long long profit = 0;
    long long weight = 0;
    int city = 0;           // 1-based, always in [2, n-1]

    bool operator==(const Item&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

/// A ThOP instance. City 1 is the start, city n is the end; items live only
/// on the interior cities. Immutable after construction, safe to share.
struct Instance {
    std::string name;
    int n = 0;
    int m = 0;
    EdgeWeightType edge_type = EdgeWeightType::Ceil2D;
    std::vector<Point> coords;       // size n when edge_type == Ceil2D, 1-based via index-1
    std::vector<long long> dist;     // n*n row-major distance matrix
    std::vector<Item> items;         // items[i].id == i+1
    long long capacity = 0;          // W
    double max_time = 0.0;           // T
    double v_min = 0.0;
    double v_max = 0.0;
    std::vector<std::vector<int>> items_at;  // city (1-based) -> item ids

    long long distance(int a, int b) const {
        if (a < 1 || a > n || b < 1 || b > n)
            throw InputError("city index out of range: " + std::to_string(a < 1 || a > n ? a : b));
        return dist[static_cast<std::size_t>(a - 1) * n + (b - 1)];
    }

    double speed(long long weight) const {
        if (weight > capacity)
            throw CapacityError("speed queried for weight " + std::to_string(weight) +
                                " above capacity " + std::to_string(capacity));
        if (weight == 0) return v_max;          // exact endpoints despite rounding
        if (weight == capacity) return v_min;
        return v_max - static_cast<double>(weight) * (v_max - v_min) / static_cast<double>(capacity);
    }

    const Item& item(int id) const {
        if (id < 1 || id > m) throw InputError("item id out of range: " + std::to_string(id));
        return items[static_cast<std::size_t>(id - 1)];
    }

    bool operator==(const Instance& other) const {
        return name == other.name && n == other.n && m == other.m &&
               edge_type == other.edge_type && coords == other.coords &&
               dist == other.dist && items == other.items &&
               capacity == other.capacity && max_time == other.max_time &&
               v_min == other.v_min && v_max == other.v_max;
    }
};

inline long long ceil_euclidean(const Point& a, const Point& b) {
    return static_cast<long long>(std::ceil(std::hypot(a.x - b.x, a.y - b.y)));
}

namespace detail {

inline void build_distance_matrix(Instance& inst) {
    inst.dist.assign(static_cast<std::size_t>(inst.n) * inst.n, 0);
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j) {
            long long d = ceil_euclidean(inst.coords[i], inst.coords[j]);
            inst.dist[static_cast<std::size_t>(i) * inst.n + j] = d;
            inst.dist[static_cast<std::size_t>(j) * inst.n + i] = d;
        }
}

inline void index_items(Instance& inst) {
    inst.items_at.assign(static_cast<std::size_t>(inst.n) + 1, {});
    for (const Item& it : inst.items) inst.items_at[static_cast<std::size_t>(it.city)].push_back(it.id);
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Validates all Instance invariants; throws ParseError naming the problem.
inline void validate_instance(const Instance& inst) {
    if (inst.n < 2) throw ParseError("DIMENSION must be at least 2, got " + std::to_string(inst.n));
    if (inst.m < 0) throw ParseError("NUMBER OF ITEMS must be non-negative");
    if (inst.capacity <= 0) throw ParseError("CAPACITY OF KNAPSACK must be positive");
    if (inst.max_time <= 0) throw ParseError("MAX TIME must be positive");
    if (!(inst.v_min > 0 && inst.v_min <= inst.v_max))
        throw ParseError("speeds must satisfy 0 < MIN SPEED <= MAX SPEED");
    if (static_cast<int>(inst.items.size()) != inst.m)
        throw ParseError("item count does not match NUMBER OF ITEMS");
    if (inst.edge_type == EdgeWeightType::Ceil2D && static_cast<int>(inst.coords.size()) != inst.n)
        throw ParseError("coordinate count does not match DIMENSION");
    if (inst.dist.size() != static_cast<std::size_t>(inst.n) * inst.n)
        throw ParseError("distance matrix size does not match DIMENSION");
    for (int i = 1; i <= inst.n; ++i) {
        if (inst.distance(i, i) != 0)
            throw ParseError("distance matrix has nonzero diagonal at city " + std::to_string(i));
        for (int j = 1; j <= inst.n; ++j) {
            long long d = inst.distance(i, j);
            if (d < 0) throw ParseError("negative distance between cities " + std::to_string(i) +
                                        " and " + std::to_string(j));
            if (d != inst.distance(j, i))
                throw ParseError("distance matrix is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        }
    }
    for (int k = 0; k < inst.m; ++k) {
        const Item& it = inst.items[static_cast<std::size_t>(k)];
        if (it.id != k + 1) throw ParseError("item ids must be 1..m in order, got " + std::to_string(it.id));
        if (it.profit <= 0) throw ParseError("item " + std::to_string(it.id) + " has non-positive profit");
        if (it.weight <= 0) throw ParseError("item " + std::to_string(it.id) + " has non-positive weight");
        if (it.city < 2 || it.city > inst.n - 1)
            throw ParseError("item " + std::to_string(it.id) + " located at city " +
                             std::to_string(it.city) + "; items are allowed only on cities 2.." +
                             std::to_string(inst.n - 1));
    }
}

inline Instance parse_instance(const std::string& text) {
    Instance inst;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false, have_m = false, have_w = false, have_t = false;
    bool have_vmin = false, have_vmax = false, have_type = false;
    bool saw_coords = false, saw_matrix = false, saw_items = false;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            line = detail::trim(line);
            if (!line.empty()) return true;
        }
        return false;
    };

    while (next_line()) {
        if (line.starts_with("NODE_COORD_SECTION")) {
            if (!have_n) fail("NODE_COORD_SECTION before DIMENSION");
            if (!have_type || inst.edge_type != EdgeWeightType::Ceil2D)
                fail("NODE_COORD_SECTION requires EDGE_WEIGHT_TYPE: CEIL_2D");
            inst.coords.resize(static_cast<std::size_t>(inst.n));
            for (int i = 0; i < inst.n; ++i) {
                if (!next_line()) fail("unexpected end of file inside NODE_COORD_SECTION");
                std::istringstream ls(line);
                int idx;
                double x, y;
                if (!(ls >> idx >> x >> y)) fail("malformed coordinate line: '" + line + "'");
                if (idx < 1 || idx > inst.n) fail("coordinate index out of range: " + std::to_string(idx));
                inst.coords[static_cast<std::size_t>(idx - 1)] = {x, y};
            }
            saw_coords = true;
        } else if (line.starts_with("EDGE_WEIGHT_SECTION")) {
            if (!have_n) fail("EDGE_WEIGHT_SECTION before DIMENSION");
            if (!have_type || inst.edge_type != EdgeWeightType::Explicit)
                fail("EDGE_WEIGHT_SECTION requires EDGE_WEIGHT_TYPE: EXPLICIT");
            inst.dist.resize(static_cast<std::size_t>(inst.n) * inst.n);
            for (int i = 0; i < inst.n; ++i) {
                if (!next_line()) fail("unexpected end of file inside EDGE_WEIGHT_SECTION");
                std::istringstream ls(line);
                for (int j = 0; j < inst.n; ++j) {
                    long long d;
                    if (!(ls >> d)) fail("row " + std::to_string(i + 1) + " of EDGE_WEIGHT_SECTION needs " +
                                         std::to_string(inst.n) + " integers");
                    inst.dist[static_cast<std::size_t>(i) * inst.n + j] = d;
                }
            }
            saw_matrix = true;
        } else if (line.starts_with("ITEMS SECTION")) {
            if (!have_n || !have_m) fail("ITEMS SECTION before DIMENSION / NUMBER OF ITEMS");
            inst.items.resize(static_cast<std::size_t>(inst.m));
            for (int i = 0; i < inst.m; ++i) {
                if (!next_line()) fail("unexpected end of file inside ITEMS SECTION");
                std::istringstream ls(line);
                Item it;
                if (!(ls >> it.id >> it.profit >> it.weight >> it.city))
                    fail("malformed item line: '" + line + "'");
                if (it.id < 1 || it.id > inst.m) fail("item index out of range: " + std::to_string(it.id));
                inst.items[static_cast<std::size_t>(it.id - 1)] = it;
            }
            saw_items = true;
        } else {
            std::size_t colon = line.find(':');
            if (colon == std::string::npos) fail("expected 'KEY: value', got '" + line + "'");
            std::string key = detail::trim(line.substr(0, colon));
            std::string value = detail::trim(line.substr(colon + 1));
            std::istringstream vs(value);
            auto parse_num = [&](auto& out) {
                if (!(vs >> out) || !(vs >> std::ws).eof())
                    fail("non-numeric value for '" + key + "': '" + value + "'");
            };
            if (key == "PROBLEM NAME") {
                inst.name = value;
            } else if (key == "DIMENSION") {
                parse_num(inst.n);
                have_n = true;
            } else if (key == "NUMBER OF ITEMS") {
                parse_num(inst.m);
                have_m = true;
            } else if (key == "CAPACITY OF KNAPSACK") {
                parse_num(inst.capacity);
                have_w = true;
            } else if (key == "MAX TIME") {
                parse_num(inst.max_time);
                have_t = true;
            } else if (key == "MIN SPEED") {
                parse_num(inst.v_min);
                have_vmin = true;
            } else if (key == "MAX SPEED") {
                parse_num(inst.v_max);
                have_vmax = true;
            } else if (key == "EDGE_WEIGHT_TYPE") {
                if (value == "CEIL_2D") inst.edge_type = EdgeWeightType::Ceil2D;
                else if (value == "EXPLICIT") inst.edge_type = EdgeWeightType::Explicit;
                else fail("unsupported EDGE_WEIGHT_TYPE: '" + value + "'");
                have_type = true;
            } else {
                fail("unknown header key: '" + key + "'");
            }
        }
    }

    if (!have_n) throw ParseError("missing header: DIMENSION");
    if (!have_m) throw ParseError("missing header: NUMBER OF ITEMS");
    if (!have_w) throw ParseError("missing header: CAPACITY OF KNAPSACK");
    if (!have_t) throw ParseError("missing header: MAX TIME");
    if (!have_vmin) throw ParseError("missing header: MIN SPEED");
    if (!have_vmax) throw ParseError("missing header: MAX SPEED");
    if (!have_type) throw ParseError("missing header: EDGE_WEIGHT_TYPE");
    if (inst.edge_type == EdgeWeightType::Ceil2D && !saw_coords)
        throw ParseError("missing NODE_COORD_SECTION");
    if (inst.edge_type == EdgeWeightType::Explicit && !saw_matrix)
        throw ParseError("missing EDGE_WEIGHT_SECTION");
    if (inst.m > 0 && !saw_items) throw ParseError("missing ITEMS SECTION");
    if (inst.m == 0) inst.items.clear();

    if (inst.edge_type == EdgeWeightType::Ceil2D) detail::build_distance_matrix(inst);
    validate_instance(inst);
    detail::index_items(inst);
    return inst;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace detail

inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "PROBLEM NAME: " << inst.name << "\n";
    out << "DIMENSION: " << inst.n << "\n";
    out << "NUMBER OF ITEMS: " << inst.m << "\n";
    out << "CAPACITY OF KNAPSACK: " << inst.capacity << "\n";
    out << "MAX TIME: " << detail::format_double(inst.max_time) << "\n";
    out << "MIN SPEED: " << detail::format_double(inst.v_min) << "\n";
    out << "MAX SPEED: " << detail::format_double(inst.v_max) << "\n";
    if (inst.edge_type == EdgeWeightType::Ceil2D) {
        out << "EDGE_WEIGHT_TYPE: CEIL_2D\n";
        out << "NODE_COORD_SECTION (INDEX, X, Y):\n";
        for (int i = 0; i < inst.n; ++i)
            out << (i + 1) << " " << detail::format_double(inst.coords[static_cast<std::size_t>(i)].x)
                << " " << detail::format_double(inst.coords[static_cast<std::size_t>(i)].y) << "\n";
    } else {
        out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
        out << "EDGE_WEIGHT_SECTION:\n";
        for (int i = 0; i < inst.n; ++i) {
            for (int j = 0; j < inst.n; ++j) {
                if (j) out << " ";
                out << inst.dist[static_cast<std::size_t>(i) * inst.n + j];
            }
            out << "\n";
        }
    }
    out << "ITEMS SECTION (INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    for (const Item& it : inst.items)
        out << it.id << " " << it.profit << " " << it.weight << " " << it.city << "\n";
    return out.str();
}

inline Instance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    Instance inst = parse_instance(buf.str());
    return inst;
}

/// A candidate ThOP solution: full tour (1 ... n) plus stolen item ids.
struct Solution {
    std::vector<int> tour;   // city indices, expected to start at 1 and end at n
    std::vector<int> plan;   // stolen item ids, kept sorted

    bool operator==(const Solution&) const = default;
};

}  // namespace thop
