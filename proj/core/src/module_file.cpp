#include "a1kit/module_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace a1kit {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

bool valid_ident(const std::string& s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

struct Generator {
    std::string ident;
    int degree;
};

}  // namespace

A1Module parse_module_file(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    {
        std::istringstream is{std::string(text)};
        std::string raw;
        int number = 0;
        while (std::getline(is, raw)) {
            ++number;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos)
                raw.erase(hash);
            std::string line = trim(raw);
            if (!line.empty())
                lines.emplace_back(number, line);
        }
    }

    std::size_t pos = 0;
    auto expect_header = [&](const std::string& header) -> int {
        if (pos >= lines.size())
            throw ModuleFileError(0, "unexpected end of file, expected \"" + header + "\"");
        if (lines[pos].second != header)
            throw ModuleFileError(lines[pos].first, "expected \"" + header + "\"");
        return lines[pos++].first;
    };

    // name
    if (pos >= lines.size() || lines[pos].second.rfind("name:", 0) != 0)
        throw ModuleFileError(pos < lines.size() ? lines[pos].first : 0,
                              "expected \"name: <ident>\"");
    std::string name = trim(lines[pos].second.substr(5));
    if (!valid_ident(name))
        throw ModuleFileError(lines[pos].first, "invalid module name \"" + name + "\"");
    ++pos;

    // generators
    expect_header("generators:");
    std::vector<Generator> gens;
    std::map<std::string, std::size_t> by_ident;
    while (pos < lines.size() && lines[pos].second != "sq1:" && lines[pos].second != "sq2:") {
        const auto& [ln, line] = lines[pos];
        std::size_t at = line.find('@');
        if (at == std::string::npos)
            throw ModuleFileError(ln, "expected \"<ident> @ <degree>\"");
        std::string ident = trim(line.substr(0, at));
        std::string deg_str = trim(line.substr(at + 1));
        if (!valid_ident(ident))
            throw ModuleFileError(ln, "invalid identifier \"" + ident + "\"");
        if (by_ident.count(ident))
            throw ModuleFileError(ln, "duplicate identifier \"" + ident + "\"");
        int degree;
        try {
            std::size_t used = 0;
            degree = std::stoi(deg_str, &used);
            if (used != deg_str.size())
                throw std::invalid_argument(deg_str);
        } catch (const std::exception&) {
            throw ModuleFileError(ln, "invalid degree \"" + deg_str + "\"");
        }
        by_ident[ident] = gens.size();
        gens.push_back({ident, degree});
        ++pos;
    }
    if (gens.empty())
        throw ModuleFileError(0, "module file declares no generators");

    // coordinates: per degree, generators in declaration order
    std::map<int, std::vector<std::size_t>> degree_gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        degree_gens[gens[i].degree].push_back(i);
    std::map<std::string, std::pair<int, std::size_t>> coord;  // ident -> (degree, index)
    std::map<int, int> dims;
    for (const auto& [d, idxs] : degree_gens) {
        dims[d] = static_cast<int>(idxs.size());
        for (std::size_t k = 0; k < idxs.size(); ++k)
            coord[gens[idxs[k]].ident] = {d, k};
    }

    // action sections
    std::map<int, GF2Matrix> sq1, sq2;
    auto parse_action = [&](int shift, std::map<int, GF2Matrix>& mats) {
        std::map<std::string, int> seen_sources;
        while (pos < lines.size() && lines[pos].second != "sq1:" && lines[pos].second != "sq2:") {
            const auto& [ln, line] = lines[pos];
            std::size_t arrow = line.find("->");
            if (arrow == std::string::npos)
                throw ModuleFileError(ln, "expected \"<ident> -> <ident> (+ <ident>)*\"");
            std::string lhs = trim(line.substr(0, arrow));
            if (!coord.count(lhs))
                throw ModuleFileError(ln, "undeclared identifier \"" + lhs + "\"");
            if (auto it = seen_sources.find(lhs); it != seen_sources.end())
                throw ModuleFileError(ln, "\"" + lhs + "\" already has an action line (line " +
                                              std::to_string(it->second) + ")");
            seen_sources[lhs] = ln;
            auto [src_deg, src_idx] = coord.at(lhs);
            int tgt_deg = src_deg + shift;

            GF2Matrix& mat = [&]() -> GF2Matrix& {
                auto it = mats.find(src_deg);
                if (it == mats.end()) {
                    std::size_t tgt_dim = dims.count(tgt_deg)
                                              ? static_cast<std::size_t>(dims.at(tgt_deg))
                                              : 0;
                    it = mats.emplace(src_deg,
                                      GF2Matrix(tgt_dim,
                                                static_cast<std::size_t>(dims.at(src_deg))))
                             .first;
                }
                return it->second;
            }();

            std::string rhs = line.substr(arrow + 2);
            std::istringstream terms(rhs);
            std::string term;
            bool any = false;
            while (std::getline(terms, term, '+')) {
                term = trim(term);
                if (term.empty())
                    throw ModuleFileError(ln, "empty term on the right-hand side");
                if (!coord.count(term))
                    throw ModuleFileError(ln, "undeclared identifier \"" + term + "\"");
                auto [deg, idx] = coord.at(term);
                if (deg != tgt_deg)
                    throw ModuleFileError(ln, "\"" + term + "\" has degree " +
                                                  std::to_string(deg) + ", expected " +
                                                  std::to_string(tgt_deg) + " (sq" +
                                                  std::to_string(shift) + " raises degree by " +
                                                  std::to_string(shift) + ")");
                if (mat.get(idx, src_idx))
                    throw ModuleFileError(ln, "\"" + term + "\" listed twice for \"" + lhs + "\"");
                mat.set(idx, src_idx, true);
                any = true;
            }
            if (!any)
                throw ModuleFileError(ln, "empty right-hand side");
            ++pos;
        }
    };

    bool saw_sq1 = false;
    if (pos < lines.size() && lines[pos].second == "sq1:") {
        ++pos;
        saw_sq1 = true;
        parse_action(1, sq1);
    }
    if (pos < lines.size() && lines[pos].second == "sq2:") {
        ++pos;
        parse_action(2, sq2);
    }
    if (pos < lines.size()) {
        if (!saw_sq1 && lines[pos].second == "sq1:")
            throw ModuleFileError(lines[pos].first, "\"sq1:\" must come before \"sq2:\"");
        throw ModuleFileError(lines[pos].first, "unexpected content \"" + lines[pos].second + "\"");
    }

    A1Module m = A1Module::build(name, std::move(dims), std::move(sq1), std::move(sq2));
    ActionReport report = verify_action(m);
    if (!report.ok) {
        std::ostringstream os;
        os << "action relations fail:";
        for (const std::string& f : report.failures)
            os << " [" << f << "]";
        throw ModuleFileError(0, os.str());
    }
    return m;
}

A1Module load_module_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ModuleFileError(0, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_module_file(buffer.str());
}

std::string print_module_file(const A1Module& m) {
    std::ostringstream os;
    std::string name = m.name();
    if (!valid_ident(name))
        name = "module";
    os << "name: " << name << "\n";
    os << "generators:\n";
    auto ident = [&](int d, std::size_t i) {
        std::ostringstream id;
        id << "g" << (d < 0 ? "m" : "") << std::abs(d);
        if (m.dim(d) > 1)
            id << "_" << i;
        return id.str();
    };
    for (const auto& [d, n] : m.dims())
        for (int i = 0; i < n; ++i)
            os << ident(d, static_cast<std::size_t>(i)) << " @ " << d << "\n";

    auto print_section = [&](int shift, const char* header) {
        std::ostringstream body;
        for (const auto& [d, n] : m.dims()) {
            GF2Matrix mat = (shift == 1) ? m.sq1(d) : m.sq2(d);
            for (int j = 0; j < n; ++j) {
                std::vector<std::string> terms;
                for (std::size_t i = 0; i < mat.rows(); ++i)
                    if (mat.get(i, static_cast<std::size_t>(j)))
                        terms.push_back(ident(d + shift, i));
                if (terms.empty())
                    continue;
                body << ident(d, static_cast<std::size_t>(j)) << " ->";
                for (std::size_t k = 0; k < terms.size(); ++k)
                    body << (k ? " + " : " ") << terms[k];
                body << "\n";
            }
        }
        std::string s = body.str();
        if (!s.empty())
            os << header << "\n" << s;
    };
    print_section(1, "sq1:");
    print_section(2, "sq2:");
    return os.str();
}

}  // namespace a1kit
