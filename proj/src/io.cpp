#include "gkp/io.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

namespace gkp {

using nlohmann::json;

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "md") return TableFormat::Markdown;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_table(const TableExport& t, TableFormat format) {
    const auto& tri = t.triangle;
    std::ostringstream out;
    switch (format) {
    case TableFormat::Csv:
        out << "n,k,value\n";
        for (std::size_t n = 0; n <= tri.n_max(); ++n) {
            for (std::size_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << to_string(tri.row(n)[k]) << '\n';
        }
        break;
    case TableFormat::Json:
        out << triangle_to_json(t);
        break;
    case TableFormat::Markdown:
        out << "| n |";
        for (std::size_t k = 0; k <= tri.n_max(); ++k) out << " k=" << k << " |";
        out << "\n|---|";
        for (std::size_t k = 0; k <= tri.n_max(); ++k) out << "---|";
        out << '\n';
        for (std::size_t n = 0; n <= tri.n_max(); ++n) {
            out << "| " << n << " |";
            for (std::size_t k = 0; k <= tri.n_max(); ++k) {
                out << ' ' << (k <= n ? to_string(tri.row(n)[k]) : std::string()) << " |";
            }
            out << '\n';
        }
        break;
    }
    return out.str();
}

namespace {

json weight_to_json(const AffineWeight& w) {
    return json::array({to_string(w.c0), to_string(w.c1), to_string(w.c2)});
}

AffineWeight weight_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("spec weight must be a 3-element array");
    auto scalar = [](const json& v) {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw std::invalid_argument("spec coefficient must be a rational string or integer");
    };
    return {scalar(j[0]), scalar(j[1]), scalar(j[2])};
}

}  // namespace

std::string triangle_to_json(const TableExport& t) {
    json entries = json::array();
    for (std::size_t n = 0; n <= t.triangle.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            entries.push_back({{"n", n}, {"k", k}, {"v", to_string(t.triangle.row(n)[k])}});
        }
    }
    json doc = {
        {"spec", {{"a", weight_to_json(t.spec.a)}, {"b", weight_to_json(t.spec.b)}}},
        {"nmax", t.triangle.n_max()},
        {"entries", std::move(entries)},
    };
    return doc.dump(2) + "\n";
}

TableExport triangle_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
        const GkpSpec spec{weight_from_json(doc.at("spec").at("a")), weight_from_json(doc.at("spec").at("b"))};
        const long n_max = doc.at("nmax").get<long>();
        if (n_max < 0) throw std::invalid_argument("nmax must be non-negative");

        std::vector<std::vector<std::optional<Rational>>> cells(static_cast<std::size_t>(n_max) + 1);
        for (std::size_t n = 0; n < cells.size(); ++n) cells[n].resize(n + 1);
        for (const auto& e : doc.at("entries")) {
            const long n = e.at("n").get<long>();
            const long k = e.at("k").get<long>();
            if (n < 0 || n > n_max || k < 0 || k > n) {
                throw std::invalid_argument("entry (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
            }
            auto& cell = cells[n][k];
            if (cell) throw std::invalid_argument("duplicate entry (" + std::to_string(n) + "," + std::to_string(k) + ")");
            cell = parse_rational(e.at("v").get<std::string>());
        }

        std::vector<std::vector<Rational>> rows(cells.size());
        for (std::size_t n = 0; n < cells.size(); ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                if (!cells[n][k]) {
                    throw std::invalid_argument("missing entry (" + std::to_string(n) + "," + std::to_string(k) + ")");
                }
                rows[n].push_back(*cells[n][k]);
            }
        }
        return {spec, Triangle(std::move(rows))};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed triangle json: ") + e.what());
    }
}

}  // namespace gkp
