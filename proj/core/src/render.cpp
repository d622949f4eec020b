#include "a1kit/render.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace a1kit {

namespace {

struct CellLayout {
    // (degree, index) -> (x, y) in SVG user units
    double x(int degree_index) const { return 60.0 + 44.0 * degree_index; }
    double y(int degree, int min_degree) const { return 40.0 + 34.0 * (degree - min_degree); }
};

void edge_list(std::ostringstream& os, const A1Module& m, int shift, const char* label) {
    bool header = false;
    for (const auto& [d, n] : m.dims()) {
        GF2Matrix mat = (shift == 1) ? m.sq1(d) : m.sq2(d);
        for (int j = 0; j < n; ++j) {
            std::vector<std::string> targets;
            for (std::size_t i = 0; i < mat.rows(); ++i)
                if (mat.get(i, static_cast<std::size_t>(j)))
                    targets.push_back(std::to_string(d + shift) + ":" + std::to_string(i));
            if (targets.empty())
                continue;
            if (!header) {
                os << label << ":\n";
                header = true;
            }
            os << "  " << d << ":" << j << " ->";
            for (std::size_t k = 0; k < targets.size(); ++k)
                os << (k ? " + " : " ") << targets[k];
            os << "\n";
        }
    }
}

}  // namespace

std::string render_module_ascii(const A1Module& m) {
    std::ostringstream os;
    os << m.name() << "  (dim " << m.total_dim() << ")\n";
    if (m.is_zero_module()) {
        os << "  (zero module)\n";
        return os.str();
    }
    for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
        if (m.dim(d) == 0)
            continue;
        os << "  " << (d < 10 && d >= 0 ? " " : "") << d << " |";
        for (int i = 0; i < m.dim(d); ++i)
            os << " o";
        os << "\n";
    }
    edge_list(os, m, 1, "sq1");
    edge_list(os, m, 2, "sq2");
    return os.str();
}

std::string render_module_svg(const A1Module& m) {
    std::ostringstream os;
    CellLayout layout;
    int lo = m.is_zero_module() ? 0 : m.min_degree();
    int hi = m.is_zero_module() ? 0 : m.max_degree();
    int max_width = 1;
    for (const auto& [d, n] : m.dims())
        max_width = std::max(max_width, n);
    double width = layout.x(max_width) + 40.0;
    double height = layout.y(hi, lo) + 40.0;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <title>" << m.name() << "</title>\n";

    // degree labels
    for (int d = lo; d <= hi; ++d)
        if (m.dim(d) > 0)
            os << "  <text x=\"16\" y=\"" << layout.y(d, lo) + 4 << "\" font-size=\"12\">" << d
               << "</text>\n";

    // edges under the cells
    auto edges = [&](int shift, bool arc) {
        for (const auto& [d, n] : m.dims()) {
            GF2Matrix mat = (shift == 1) ? m.sq1(d) : m.sq2(d);
            for (int j = 0; j < n; ++j)
                for (std::size_t i = 0; i < mat.rows(); ++i) {
                    if (!mat.get(i, static_cast<std::size_t>(j)))
                        continue;
                    double x1 = layout.x(j), y1 = layout.y(d, lo);
                    double x2 = layout.x(static_cast<int>(i)), y2 = layout.y(d + shift, lo);
                    if (arc) {
                        double cx = std::max(x1, x2) + 22.0;
                        os << "  <path d=\"M " << x1 << " " << y1 << " Q " << cx << " "
                           << (y1 + y2) / 2 << " " << x2 << " " << y2
                           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
                    } else {
                        os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
                           << "\" y2=\"" << y2 << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
                    }
                }
        }
    };
    edges(1, false);
    edges(2, true);

    // cells
    for (const auto& [d, n] : m.dims())
        for (int i = 0; i < n; ++i)
            os << "  <circle cx=\"" << layout.x(i) << "\" cy=\"" << layout.y(d, lo)
               << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    os << "</svg>\n";
    return os.str();
}

std::string render_chart_ascii(const ExtChart& chart) {
    int min_stem = 0;
    for (const auto& [st, n] : chart.counts) {
        (void)n;
        min_stem = std::min(min_stem, st.second - st.first);
    }
    int max_stem = std::max(chart.reliable_max_t, min_stem);

    std::ostringstream os;
    for (int s = chart.max_s; s >= 0; --s) {
        os << (s < 10 ? " " : "") << s << " |";
        for (int stem = min_stem; stem <= max_stem; ++stem) {
            int t = stem + s;
            if (!chart.reliable(s, t)) {
                os << " ?";
            } else {
                int n = chart.at(s, t);
                if (n == 0)
                    os << " .";
                else if (n < 10)
                    os << " " << n;
                else
                    os << " +";
            }
        }
        os << "\n";
    }
    os << "---+";
    for (int stem = min_stem; stem <= max_stem; ++stem)
        os << "--";
    os << "\n   ";
    for (int stem = min_stem; stem <= max_stem; ++stem) {
        if (stem % 5 == 0) {
            std::string label = std::to_string(stem);
            os << " " << (label.size() == 1 ? label : label.substr(label.size() - 1));
        } else {
            os << "  ";
        }
    }
    os << "   (stem = t - s; '?' = outside the reliable window)\n";
    return os.str();
}

std::string render_chart_svg(const ExtChart& chart) {
    int min_stem = 0, max_stem = chart.reliable_max_t;
    for (const auto& [st, n] : chart.counts) {
        (void)n;
        min_stem = std::min(min_stem, st.second - st.first);
    }
    const double cell = 18.0, margin = 40.0;
    double width = margin * 2 + cell * (max_stem - min_stem + 1);
    double height = margin * 2 + cell * (chart.max_s + 1);
    auto px = [&](int stem) { return margin + cell * (stem - min_stem) + cell / 2; };
    auto py = [&](int s) { return height - margin - cell * s - cell / 2; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    // shade grid cells outside the reliable window (t = stem + s > reliable)
    for (int s = 0; s <= chart.max_s; ++s)
        for (int stem = min_stem; stem <= max_stem; ++stem)
            if (stem + s > chart.reliable_max_t)
                os << "  <rect x=\"" << px(stem) - cell / 2 << "\" y=\"" << py(s) - cell / 2
                   << "\" width=\"" << cell << "\" height=\"" << cell
                   << "\" fill=\"#eeeeee\" stroke=\"none\"/>\n";

    // axes
    os << "  <line x1=\"" << margin - 10 << "\" y1=\"" << py(0) + cell / 2 << "\" x2=\""
       << width - 10 << "\" y2=\"" << py(0) + cell / 2
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << px(min_stem) - cell / 2 << "\" y1=\"" << margin - 10 << "\" x2=\""
       << px(min_stem) - cell / 2 << "\" y2=\"" << py(0) + cell / 2
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int stem = min_stem; stem <= max_stem; ++stem)
        if (stem % 5 == 0)
            os << "  <text x=\"" << px(stem) << "\" y=\"" << py(0) + cell / 2 + 14
               << "\" font-size=\"10\" text-anchor=\"middle\">" << stem << "</text>\n";
    for (int s = 0; s <= chart.max_s; ++s)
        if (s % 5 == 0)
            os << "  <text x=\"" << px(min_stem) - cell / 2 - 6 << "\" y=\"" << py(s) + 3
               << "\" font-size=\"10\" text-anchor=\"end\">" << s << "</text>\n";

    // dots; multiplicities above 1 are drawn as a small cluster with a label
    for (const auto& [st, n] : chart.counts) {
        auto [s, t] = st;
        int stem = t - s;
        if (stem < min_stem || stem > max_stem || s > chart.max_s)
            continue;
        os << "  <circle cx=\"" << px(stem) << "\" cy=\"" << py(s)
           << "\" r=\"3\" fill=\"black\"/>\n";
        if (n > 1)
            os << "  <text x=\"" << px(stem) + 5 << "\" y=\"" << py(s) - 4
               << "\" font-size=\"9\">" << n << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string chart_json(const ExtChart& chart, const std::string& module_name) {
    nlohmann::ordered_json j;
    j["module"] = module_name;
    j["max_s"] = chart.max_s;
    j["max_t"] = chart.max_t;
    j["reliable_max_t"] = chart.reliable_max_t;
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& [st, n] : chart.counts) {
        counts.push_back(nlohmann::ordered_json{
            {"s", st.first}, {"t", st.second}, {"n", st.second - st.first}, {"dim", n}});
    }
    j["counts"] = std::move(counts);
    return j.dump(2) + "\n";
}

std::string graded_dims_str(const GradedDims& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, n] : dims) {
        os << (first ? "" : ", ") << d << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string render_resolution(const Resolution& r) {
    std::ostringstream os;
    os << "minimal resolution of " << r.target.name() << "  (max_s=" << r.max_s
       << ", max_t=" << r.max_t << ")\n";
    for (std::size_t s = 0; s < r.stages.size(); ++s) {
        os << "  s=" << s << ": ";
        if (r.stages[s].gen_degrees.empty()) {
            os << "(no generators)";
        } else {
            for (std::size_t i = 0; i < r.stages[s].gen_degrees.size(); ++i)
                os << (i ? " " : "") << "t=" << r.stages[s].gen_degrees[i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace a1kit
