#include "liecp/json_io.hpp"

#include <sstream>

#include "liecp/errors.hpp"

namespace liecp {

namespace {

std::string class_name(RootClass c) {
    return c == RootClass::Long ? "long" : "short";
}

Json ambient_to_json(const AmbientVector& v) {
    Json out = Json::array();
    for (const Rational& x : v) out.push_back(format_rational(x));
    return out;
}

}  // namespace

Json weight_to_json(const Weight& w) {
    Json out = Json::array();
    for (std::int64_t c : w.coords) out.push_back(c);
    return out;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json multiset_to_json(const WeightMultiset& ws) {
    Json out = Json::array();
    for (const auto& [w, mult] : ws.entries) {
        Json item;
        item["coords"] = weight_to_json(w);
        item["mult"] = mult;
        out.push_back(std::move(item));
    }
    return out;
}

Json decomposition_to_json(const Decomposition& d) {
    Json out = Json::array();
    for (const auto& [w, mult] : d.entries) {
        Json item;
        item["highest"] = weight_to_json(w);
        item["mult"] = mult;
        out.push_back(std::move(item));
    }
    return out;
}

Json rootsys_to_json(const RootSystem& rs) {
    Json out;
    out["family"] = std::string(1, family_char(rs.tag().family));
    out["rank"] = rs.rank();
    out["ambient_dim"] = rs.ambient_dim();

    Json cartan = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
        cartan.push_back(std::move(row));
    }
    out["cartan_matrix"] = std::move(cartan);

    Json simple = Json::array();
    for (const AmbientVector& root : rs.simple_roots()) simple.push_back(ambient_to_json(root));
    out["simple_roots"] = std::move(simple);

    Json positives = Json::array();
    for (const PositiveRoot& r : rs.positive_roots()) {
        Json item;
        item["fundamental"] = weight_to_json(r.fundamental);
        item["simple_coords"] = r.simple_coords;
        item["ambient"] = ambient_to_json(r.ambient);
        item["height"] = r.height;
        item["long"] = r.is_long;
        positives.push_back(std::move(item));
    }
    out["positive_roots"] = std::move(positives);

    Json fundamental = Json::array();
    for (const AmbientVector& w : rs.fundamental_weights())
        fundamental.push_back(ambient_to_json(w));
    out["fundamental_weights"] = std::move(fundamental);
    out["weyl_vector"] = ambient_to_json(rs.rho());
    return out;
}

Json report_to_json(const EmbeddingReport& r) {
    Json out;
    out["family"] = std::string(1, family_char(r.family));
    out["rank"] = r.rank;
    out["class"] = class_name(r.root_class);
    out["dim"] = r.dim_l;
    out["cartan_dim"] = r.cartan_dim;

    Json k;
    for (int i = 0; i <= 3; ++i) k[std::to_string(i)] = r.k_roots[static_cast<std::size_t>(i)];
    out["k_roots"] = std::move(k);
    out["k0_total"] = r.k0_total;

    std::ostringstream identity;
    identity << r.dim_l << " = " << r.k0_total << " + 2*(" << r.k_roots[1] << "+" << r.k_roots[2]
             << "+" << r.k_roots[3] << ")";
    out["identity"] = identity.str();

    Json refs = Json::array();
    for (const ReferenceMatch& ref : r.references) {
        Json item;
        item["row"] = ref.row;
        Json claimed;
        for (int i = 0; i <= 3; ++i)
            claimed["k" + std::to_string(i)] = ref.claimed[static_cast<std::size_t>(i)];
        item["claimed"] = std::move(claimed);
        item["k0_convention"] = to_string(ref.k0_convention);
        Json matches;
        for (int i = 0; i <= 3; ++i)
            matches["k" + std::to_string(i)] = ref.matches[static_cast<std::size_t>(i)];
        item["matches"] = std::move(matches);
        item["full_match"] = ref.full_match;
        refs.push_back(std::move(item));
    }
    out["references"] = std::move(refs);
    return out;
}

Json audit_to_json(const std::vector<EmbeddingReport>& reports) {
    Json out = Json::array();
    for (const EmbeddingReport& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::string audit_to_markdown(const std::vector<EmbeddingReport>& reports) {
    std::ostringstream os;
    os << "| row | type | class | dim | k0 (roots) | k0 (total) | k1 | k2 | k3 | claimed "
          "(k0,k1,k2,k3) | k0 reading | match |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const EmbeddingReport& r : reports) {
        for (const ReferenceMatch& ref : r.references) {
            os << "| " << ref.row << " | " << family_char(r.family) << r.rank
               << " | " << class_name(r.root_class) << " | " << r.dim_l << " | " << r.k_roots[0]
               << " | " << r.k0_total << " | " << r.k_roots[1] << " | " << r.k_roots[2] << " | "
               << r.k_roots[3] << " | " << ref.claimed[0] << "," << ref.claimed[1] << ","
               << ref.claimed[2] << "," << ref.claimed[3] << " | " << to_string(ref.k0_convention)
               << " | " << (ref.full_match ? "yes" : "NO") << " |\n";
        }
    }
    return os.str();
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

WeightMultiset multiset_from_json(const Json& j, const RsTag& tag) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("factors"))
            throw ParseError("expected a list of factors or an object with a \"factors\" key");
        list = &j.at("factors");
    }
    if (!list->is_array()) throw ParseError("factor list must be a JSON array");

    WeightMultiset out;
    out.tag = tag;
    for (const Json& item : *list) {
        if (!item.is_object() || !item.contains("coords") || !item.contains("mult"))
            throw ParseError("each factor must be an object with \"coords\" and \"mult\"");
        const Json& coords = item.at("coords");
        if (!coords.is_array()) throw ParseError("\"coords\" must be a JSON array");
        Weight w;
        for (const Json& c : coords) {
            if (!c.is_number_integer())
                throw ParseError("weight coordinates must be integers");
            w.coords.push_back(c.get<std::int64_t>());
        }
        if (static_cast<int>(w.coords.size()) != tag.rank) {
            std::ostringstream msg;
            msg << "weight has " << w.coords.size() << " coordinates; expected " << tag.rank;
            throw ShapeError(msg.str());
        }
        const Json& mult = item.at("mult");
        if (!mult.is_number_integer() || mult.get<std::int64_t>() < 1)
            throw ParseError("\"mult\" must be a positive integer");
        out.entries[w] += mult.get<std::int64_t>();
    }
    return out;
}

}  // namespace liecp
