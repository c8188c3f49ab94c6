#include "braidlab/specfile.hpp"

#include "braidlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace braidlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

// cycle notation, e.g. "(1 2)(3 4 5)" or "()" for the identity
Perm parse_cycles(const std::string& text, size_t points, int line) {
    std::vector<int> img(points);
    for (size_t i = 0; i < points; ++i) img[i] = (int)i;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw InputError("expected '(' in cycle notation", line, (int)pos);
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw InputError("unclosed cycle", line, (int)pos);
        std::string body = text.substr(pos + 1, close - pos - 1);
        std::vector<int> cycle;
        std::istringstream is(body);
        std::string tok;
        while (is >> tok) {
            for (char& ch : tok)
                if (ch == ',') ch = ' ';
            std::istringstream is2(tok);
            long v;
            while (is2 >> v) {
                if (v < 1 || (size_t)v > points)
                    throw InputError("cycle entry out of range 1.." + std::to_string(points),
                                     line, (int)pos);
                cycle.push_back((int)v - 1);
            }
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            img[(size_t)cycle[k]] = cycle[(k + 1) % cycle.size()];
        pos = close + 1;
    }
    return Perm(img);
}

size_t max_point(const std::string& text) {
    size_t mx = 1;
    size_t pos = 0;
    while (pos < text.size()) {
        if (isdigit((unsigned char)text[pos])) {
            size_t end = pos;
            while (end < text.size() && isdigit((unsigned char)text[end])) ++end;
            mx = std::max(mx, (size_t)std::stoul(text.substr(pos, end - pos)));
            pos = end;
        } else {
            ++pos;
        }
    }
    return mx;
}

// "(1 2)" or "(1 2) * diag(1, -1, zeta(4)^1)"
MonomialMatrix parse_generator(const std::string& text, size_t points, int line) {
    size_t star = text.find("diag(");
    std::string perm_part = star == std::string::npos ? text : text.substr(0, star);
    size_t mult = perm_part.rfind('*');
    if (mult != std::string::npos) perm_part = perm_part.substr(0, mult);
    MonomialMatrix m = MonomialMatrix::from_perm(parse_cycles(trim(perm_part), points, line));
    if (star != std::string::npos) {
        size_t close = text.find(')', star + 5);
        size_t depth_close = text.rfind(')');
        close = depth_close;
        std::string body = text.substr(star + 5, close - star - 5);
        auto entries = split(body, ',');
        if (entries.size() != points)
            throw InputError("diag needs " + std::to_string(points) + " entries", line, 0);
        for (size_t i = 0; i < points; ++i) m.diag[i] = FieldScalar::from_string(entries[i]);
    }
    return m;
}

struct Line {
    int number;
    std::string key;
    std::string value;
};

}  // namespace

SpecFile parse_spec_text(const std::string& text, size_t group_cap) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string section;
    std::map<std::string, std::vector<Line>> sections;
    static const std::map<std::string, std::vector<std::string>> known_keys = {
        {"group", {"name", "points", "gen", "cap"}},
        {"space", {"kind", "group", "elements", "labels", "signs", "q", "row", "dim",
                   "degrees", "action"}},
        {"task", {"task", "max-degree", "conductor", "group-cap", "tensor-cap", "arity",
                  "quotient"}},
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw InputError("unterminated section header", lineno, 0);
            section = trim(line.substr(1, line.size() - 2));
            if (!known_keys.count(section))
                throw InputError("unknown section [" + section + "]", lineno, 0);
            sections[section];
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw InputError("expected key = value", lineno, (int)eq);
        if (section.empty()) throw InputError("key outside any section", lineno, 0);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        const auto& allowed = known_keys.at(section);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw InputError("unknown key '" + key + "' in section [" + section + "]", lineno,
                             0);
        sections[section].push_back({lineno, key, value});
    }

    SpecFile out;
    if (sections.count("group")) {
        size_t points = 0, cap = group_cap;
        std::vector<std::pair<int, std::string>> gen_texts;
        for (const auto& l : sections["group"]) {
            if (l.key == "name") out.group_name = l.value;
            if (l.key == "points") points = std::stoul(l.value);
            if (l.key == "cap") cap = std::stoul(l.value);
            if (l.key == "gen") gen_texts.emplace_back(l.number, l.value);
        }
        if (gen_texts.empty()) throw InputError("[group] needs at least one gen", 0, 0);
        if (points == 0)
            for (const auto& [ln, t] : gen_texts) points = std::max(points, max_point(t));
        std::vector<MonomialMatrix> gens;
        for (const auto& [ln, t] : gen_texts) gens.push_back(parse_generator(t, points, ln));
        out.group = FinGroup::close_group(gens, cap);
    }

    if (sections.count("space")) {
        std::string kind, group_ref;
        std::vector<std::string> labels;
        std::vector<int> signs;
        std::vector<std::pair<int, std::string>> rows, degrees_text, action_text;
        std::string elements_text;
        int elements_line = 0;
        for (const auto& l : sections["space"]) {
            if (l.key == "kind") kind = l.value;
            if (l.key == "group") group_ref = l.value;
            if (l.key == "elements") { elements_text = l.value; elements_line = l.number; }
            if (l.key == "labels") {
                for (auto& s : split(l.value, ',')) labels.push_back(s);
            }
            if (l.key == "signs") {
                for (auto& s : split(l.value, ',')) signs.push_back(std::stoi(s));
            }
            if (l.key == "q" || l.key == "row") rows.emplace_back(l.number, l.value);
            if (l.key == "degrees") degrees_text.emplace_back(l.number, l.value);
            if (l.key == "action") action_text.emplace_back(l.number, l.value);
        }
        if (kind.empty()) throw InputError("[space] needs kind = rack|diagonal|yd", 0, 0);

        if (kind == "rack" || kind == "yd") {
            if (!out.group)
                throw InputError("[space] of kind " + kind + " needs a [group] section", 0, 0);
        }
        if (kind == "rack") {
            if (elements_text.empty())
                throw InputError("rack space needs elements = ...", 0, 0);
            std::vector<size_t> subset;
            size_t points = out.group->element(0).dim();
            for (const auto& t : split(elements_text, ',')) {
                MonomialMatrix m =
                    MonomialMatrix::from_perm(parse_cycles(t, points, elements_line));
                auto idx = out.group->index_of(m);
                if (!idx)
                    throw InputError("element " + t + " is not in the group", elements_line, 0);
                subset.push_back(*idx);
            }
            out.space = YDSpace::rack_space(out.group, subset, signs, labels);
        } else if (kind == "diagonal") {
            std::vector<std::vector<FieldScalar>> q;
            for (const auto& [ln, t] : rows) {
                std::vector<FieldScalar> row;
                for (const auto& e : split(t, ',')) {
                    try {
                        row.push_back(FieldScalar::from_string(e));
                    } catch (const std::exception& ex) {
                        throw InputError(std::string("bad scalar: ") + ex.what(), ln, 0);
                    }
                }
                q.push_back(std::move(row));
            }
            if (q.empty()) throw InputError("diagonal space needs q = / row = entries", 0, 0);
            out.space = YDSpace::diagonal_space(q);
        } else if (kind == "yd") {
            size_t points = out.group->element(0).dim();
            std::vector<size_t> degs;
            for (const auto& [ln, t] : degrees_text)
                for (const auto& e : split(t, ',')) {
                    auto idx = out.group->index_of(
                        MonomialMatrix::from_perm(parse_cycles(e, points, ln)));
                    if (!idx) throw InputError("degree " + e + " not in group", ln, 0);
                    degs.push_back(*idx);
                }
            if (degs.empty()) throw InputError("yd space needs degrees = ...", 0, 0);
            const size_t d = degs.size();
            if (action_text.size() != out.group->generator_count())
                throw InputError("yd space needs one action = [..] per group generator", 0, 0);
            std::vector<Matrix> action;
            for (const auto& [ln, t] : action_text) {
                std::string body = trim(t);
                if (body.front() != '[' || body.back() != ']')
                    throw InputError("action matrix must be bracketed [r; r; ...]", ln, 0);
                body = body.substr(1, body.size() - 2);
                auto row_texts = split(body, ';');
                if (row_texts.size() != d)
                    throw InputError("action matrix needs " + std::to_string(d) + " rows", ln, 0);
                Matrix m(d, d);
                for (size_t i = 0; i < d; ++i) {
                    auto cols = split(row_texts[i], ',');
                    if (cols.size() != d)
                        throw InputError("action matrix row needs " + std::to_string(d) +
                                         " entries", ln, 0);
                    for (size_t j = 0; j < d; ++j)
                        m.at(i, j) = FieldScalar::from_string(cols[j]);
                }
                action.push_back(std::move(m));
            }
            out.space = YDSpace(out.group, degs, action, {}, labels);
        } else {
            throw InputError("unknown space kind '" + kind + "'", 0, 0);
        }
    }

    if (sections.count("task")) {
        SpecTask task;
        for (const auto& l : sections["task"]) {
            if (l.key == "task")
                task.task = l.value;
            else
                task.options[l.key] = l.value;
        }
        out.task = task;
    }
    return out;
}

SpecFile parse_spec(const std::string& path, size_t group_cap) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str(), group_cap);
}

}  // namespace braidlab
