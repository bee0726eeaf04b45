#include "eulercat/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace eulercat {

namespace {

std::string position_prefix(std::size_t line, std::size_t col) {
    if (line == 0) return "";
    std::string p = "line " + std::to_string(line);
    if (col > 0) p += ", col " + std::to_string(col);
    return p + ": ";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t col)
    : std::runtime_error(position_prefix(line, col) + message), line_(line), col_(col) {}

namespace {

struct Token {
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::int64_t parse_entry(const Token& tok, std::size_t lineno) {
    if (tok.text[0] == '-')
        throw ParseError("negative entry '" + tok.text + "'", lineno, tok.col);
    for (char ch : tok.text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("invalid entry '" + tok.text + "'", lineno, tok.col);
    try {
        return std::stoll(tok.text);
    } catch (const std::out_of_range&) {
        throw ParseError("entry '" + tok.text + "' out of range", lineno, tok.col);
    }
}

}  // namespace

CountMatrix parse_matrix_file(const std::string& text) {
    // Significant lines with their 1-based numbers, comments stripped.
    std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<Token> toks = tokenize(raw);
        if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
    }

    if (lines.empty()) throw ParseError("expected matrix dimension, got end of input");
    auto& [dim_line, dim_toks] = lines.front();
    if (dim_toks.size() != 1)
        throw ParseError("expected a single dimension value", dim_line, dim_toks[1].col);
    std::int64_t m = parse_entry(dim_toks[0], dim_line);
    if (m < 1) throw ParseError("matrix dimension must be positive", dim_line, dim_toks[0].col);

    std::size_t dim = static_cast<std::size_t>(m);
    if (lines.size() < dim + 1) {
        std::size_t got = lines.size() - 1;
        throw ParseError("expected " + std::to_string(dim) + " matrix rows, got " +
                         std::to_string(got));
    }
    if (lines.size() > dim + 1)
        throw ParseError("unexpected content after matrix", lines[dim + 1].first,
                         lines[dim + 1].second[0].col);

    std::vector<std::int64_t> entries;
    entries.reserve(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        auto& [lineno, toks] = lines[r + 1];
        if (toks.size() != dim)
            throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(dim),
                             lineno, toks[0].col);
        for (const Token& tok : toks) entries.push_back(parse_entry(tok, lineno));
    }
    return CountMatrix(dim, std::move(entries));
}

std::string serialize_matrix(const CountMatrix& z) {
    std::ostringstream out;
    out << z.dim() << "\n";
    for (std::size_t i = 0; i < z.dim(); ++i) {
        for (std::size_t j = 0; j < z.dim(); ++j) out << (j ? " " : "") << z.at(i, j);
        out << "\n";
    }
    return out.str();
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_of(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

}  // namespace

CatPresentation parse_category_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("category document must be a JSON object");

    CatPresentation c;
    std::map<std::string, std::size_t> obj_index, arr_index;

    const json& objects = field(j, "objects");
    if (!objects.is_array()) throw ParseError("'objects' must be an array");
    for (const json& o : objects) {
        std::string name = string_of(o, "object name");
        if (!obj_index.emplace(name, c.objects.size()).second)
            throw ParseError("duplicate object '" + name + "'");
        c.objects.push_back(std::move(name));
    }

    auto object_ref = [&](const json& v, const std::string& what) {
        std::string name = string_of(v, what);
        auto it = obj_index.find(name);
        if (it == obj_index.end()) throw ParseError("unknown object '" + name + "' in " + what);
        return it->second;
    };

    const json& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw ParseError("'arrows' must be an array");
    for (const json& a : arrows) {
        if (!a.is_object()) throw ParseError("each arrow must be an object");
        std::string name = string_of(field(a, "name"), "arrow name");
        std::size_t src = object_ref(field(a, "src"), "arrow src");
        std::size_t tgt = object_ref(field(a, "tgt"), "arrow tgt");
        if (!arr_index.emplace(name, c.arrows.size()).second)
            throw ParseError("duplicate arrow '" + name + "'");
        c.arrows.push_back({std::move(name), src, tgt});
    }

    auto arrow_ref = [&](const json& v, const std::string& what) {
        std::string name = string_of(v, what);
        auto it = arr_index.find(name);
        if (it == arr_index.end()) throw ParseError("unknown arrow '" + name + "' in " + what);
        return it->second;
    };

    const json& identities = field(j, "identities");
    if (!identities.is_object()) throw ParseError("'identities' must be an object");
    c.identities.assign(c.objects.size(), kNoArrow);
    for (auto it = identities.begin(); it != identities.end(); ++it) {
        auto oi = obj_index.find(it.key());
        if (oi == obj_index.end())
            throw ParseError("unknown object '" + it.key() + "' in identities");
        c.identities[oi->second] = arrow_ref(it.value(), "identities");
    }
    for (std::size_t i = 0; i < c.objects.size(); ++i)
        if (c.identities[i] == kNoArrow)
            throw ParseError("no identity given for object '" + c.objects[i] + "'");

    const json& composition = field(j, "composition");
    if (!composition.is_array()) throw ParseError("'composition' must be an array");
    std::size_t narr = c.arrows.size();
    c.compose.assign(narr, std::vector<std::size_t>(narr, kNoArrow));
    for (const json& triple : composition) {
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("each composition entry must be a [g, f, gf] triple");
        std::size_t g = arrow_ref(triple[0], "composition");
        std::size_t f = arrow_ref(triple[1], "composition");
        std::size_t gf = arrow_ref(triple[2], "composition");
        if (c.compose[g][f] != kNoArrow && c.compose[g][f] != gf)
            throw ParseError("conflicting composition entries for (" + c.arrows[g].name + ", " +
                             c.arrows[f].name + ")");
        c.compose[g][f] = gf;
    }
    return c;
}

std::string serialize_category(const CatPresentation& c) {
    {
        // Index sanity only; law violations are fine to serialize.
        for (const Arrow& a : c.arrows)
            if (a.src >= c.objects.size() || a.tgt >= c.objects.size())
                throw std::invalid_argument("serialize_category: arrow endpoint out of range");
        for (std::size_t id : c.identities)
            if (id >= c.arrows.size())
                throw std::invalid_argument("serialize_category: identity out of range");
        for (const auto& row : c.compose)
            for (std::size_t v : row)
                if (v != kNoArrow && v >= c.arrows.size())
                    throw std::invalid_argument("serialize_category: composite out of range");
    }
    ordered_json j;
    j["objects"] = c.objects;
    j["arrows"] = ordered_json::array();
    for (const Arrow& a : c.arrows)
        j["arrows"].push_back(ordered_json{{"name", a.name},
                                           {"src", c.objects[a.src]},
                                           {"tgt", c.objects[a.tgt]}});
    ordered_json ids = ordered_json::object();
    for (std::size_t i = 0; i < c.identities.size(); ++i)
        ids[c.objects[i]] = c.arrows[c.identities[i]].name;
    j["identities"] = std::move(ids);
    ordered_json comp = ordered_json::array();
    for (std::size_t g = 0; g < c.arrows.size(); ++g)
        for (std::size_t f = 0; f < c.arrows.size(); ++f)
            if (c.compose[g][f] != kNoArrow)
                comp.push_back(ordered_json::array(
                    {c.arrows[g].name, c.arrows[f].name, c.arrows[c.compose[g][f]].name}));
    j["composition"] = std::move(comp);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
    if (!out.good()) throw ParseError("cannot write file: " + path);
}

InputFormat detect_format(const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return InputFormat::category;
    return InputFormat::matrix;
}

}  // namespace eulercat
