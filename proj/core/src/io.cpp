#include "picod/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace picod::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::runtime_error(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_lists(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::runtime_error(std::string("missing or non-array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    out.reserve(j[key].size());
    for (const auto& row : j[key]) {
        if (!row.is_array()) throw std::runtime_error(std::string("field \"") + key + "\" must hold arrays");
        std::vector<int> values;
        values.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::runtime_error(std::string("non-integer entry in \"") + key + "\"");
            values.push_back(v.get<int>());
        }
        out.push_back(std::move(values));
    }
    return out;
}

json coloring_to_value(const KFoldColoring& c) {
    return json{{"k", c.fold()}, {"L", c.palette_size()}, {"assign", c.assignment()}};
}

KFoldColoring coloring_from_value(const json& j) {
    return KFoldColoring(require_int(j, "k"), require_int(j, "L"), require_int_lists(j, "assign"));
}

}  // namespace

std::string to_json(const PicodInstance& inst) {
    return json{{"m", inst.message_count()}, {"edges", inst.request_sets()}}.dump();
}

PicodInstance instance_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        return PicodInstance(require_int(j, "m"), require_int_lists(j, "edges"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_json(const KFoldColoring& c) { return coloring_to_value(c).dump(); }

KFoldColoring coloring_from_json(const std::string& text) {
    try {
        return coloring_from_value(parse(text));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_json(const ColoringCollection& col) {
    json members = json::array();
    for (const auto& c : col.members()) members.push_back(coloring_to_value(c));
    return json{{"k", col.fold()}, {"colorings", std::move(members)}}.dump();
}

ColoringCollection collection_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("colorings") || !j["colorings"].is_array())
        throw std::runtime_error("missing or non-array field \"colorings\"");
    try {
        std::vector<KFoldColoring> members;
        members.reserve(j["colorings"].size());
        for (const auto& c : j["colorings"]) members.push_back(coloring_from_value(c));
        if (members.empty()) return ColoringCollection(require_int(j, "k"));
        return ColoringCollection(std::move(members));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_json(const EssentialSelection& sel) {
    return json{{"essential", sel.essential}}.dump();
}

EssentialSelection selection_from_json(const std::string& text) {
    return EssentialSelection{require_int_lists(parse(text), "essential")};
}

std::string to_json(const FieldMatrix& g) {
    json rows = json::array();
    for (int r = 0; r < g.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < g.cols(); ++c) row.push_back(g.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"q", g.q()}, {"k", g.fold()}, {"rows", g.rows()}, {"entries", std::move(rows)}}.dump();
}

FieldMatrix matrix_from_json(const std::string& text) {
    const json j = parse(text);
    const int q = require_int(j, "q");
    const int k = require_int(j, "k");
    const int rows = require_int(j, "rows");
    const auto entries = require_int_lists(j, "entries");
    if (static_cast<int>(entries.size()) != rows)
        throw std::runtime_error("row count does not match \"rows\"");
    const size_t cols = rows == 0 ? 0 : entries.front().size();
    for (const auto& row : entries)
        if (row.size() != cols) throw std::runtime_error("ragged \"entries\" rows");
    if (k < 1 || (cols % static_cast<size_t>(k)) != 0)
        throw std::runtime_error("column count must be a multiple of \"k\"");
    try {
        gf::Matrix m(q, rows, static_cast<int>(cols));
        for (int r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                const int value = entries[static_cast<size_t>(r)][c];
                if (value < 0 || value >= q) throw std::runtime_error("matrix entry outside [0, q)");
                m.at(r, static_cast<int>(c)) = value;
            }
        return FieldMatrix(std::move(m), k);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_json(const ChainReport& report) {
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j{{"l_star", opt(report.l_star)}, {"chi", opt(report.chi)},
           {"alpha", opt(report.alpha)},   {"delta", opt(report.delta)},
           {"lambda", opt(report.lambda)}, {"chain_ok", report.complete ? json(report.chain_ok) : json(nullptr)}};
    return j.dump();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

PicodInstance load_instance(const std::filesystem::path& path) {
    return instance_from_json(read_file(path));
}

void save_instance(const PicodInstance& inst, const std::filesystem::path& path) {
    write_file(path, to_json(inst) + "\n");
}

FieldMatrix load_matrix(const std::filesystem::path& path) {
    return matrix_from_json(read_file(path));
}

void save_matrix(const FieldMatrix& g, const std::filesystem::path& path) {
    write_file(path, to_json(g) + "\n");
}

}  // namespace picod::io
