#include "rado/json_io.hpp"

#include <algorithm>

#include "rado/errors.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw validation_error("expected an integer or a decimal string");
}

json matrix_to_json(const IntMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(int_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw validation_error("matrix must be a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw validation_error("matrix rows must be arrays");
        std::vector<Int> row;
        for (const auto& e : r) row.push_back(int_from_json(e));
        rows.push_back(std::move(row));
    }
    return IntMatrix(rows);
}

json group_to_json(const GroupSpec& g) { return json(g.to_string()); }

GroupSpec group_from_json(const json& j) {
    if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
    if (j.is_array()) {
        std::vector<std::int64_t> fs;
        for (const auto& e : j) {
            if (!e.is_number_integer()) throw validation_error("group factors must be integers");
            fs.push_back(e.get<std::int64_t>());
        }
        return GroupSpec(std::move(fs));
    }
    throw validation_error("group must be a 'ZaxZb' string or a factor array");
}

Ring ring_from_string(const std::string& s) {
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.size() > 1 && (s[0] == 'Z' || s[0] == 'z')) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw validation_error("bad ring '" + s + "'");
        return Ring::mod(parse_int(s.substr(1)));
    }
    throw validation_error("bad ring '" + s + "': expected Z, Q or Z<n>");
}

ElementSet element_set_from_json(const GroupSpec& g, const json& j) {
    if (!j.is_array()) throw validation_error("element set must be an array");
    SmallGroup sg(g);
    ElementSet out;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            long long r = e.get<long long>();
            if (r < 0 || static_cast<std::uint64_t>(r) >= sg.size())
                throw validation_error("element rank out of range");
            out.push_back(static_cast<std::uint64_t>(r));
        } else if (e.is_array()) {
            std::vector<std::int64_t> coords;
            for (const auto& c : e) coords.push_back(c.get<std::int64_t>());
            out.push_back(element_rank(make_element(g, std::move(coords))));
        } else {
            throw validation_error("set entries are ranks or residue vectors");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json element_set_to_json(const ElementSet& s) {
    json out = json::array();
    for (auto r : s) out.push_back(r);
    return out;
}

json certificate_to_json(const ColumnsCertificate& cert) {
    json j;
    j["ring"] = cert.ring.name();
    j["order"] = cert.order;
    j["breakpoints"] = cert.breakpoints;
    json lams = json::array();
    for (const auto& block : cert.lambda) {
        json l = json::array();
        for (const auto& x : block) l.push_back(to_decimal(x));
        lams.push_back(std::move(l));
    }
    j["lambda"] = std::move(lams);
    return j;
}

ColumnsCertificate certificate_from_json(const json& j) {
    ColumnsCertificate cert;
    cert.ring = ring_from_string(j.at("ring").get<std::string>());
    cert.order = j.at("order").get<std::vector<std::size_t>>();
    cert.breakpoints = j.at("breakpoints").get<std::vector<std::size_t>>();
    for (const auto& block : j.at("lambda")) {
        std::vector<Rat> l;
        for (const auto& x : block) {
            if (x.is_number_integer())
                l.emplace_back(Rat(static_cast<long>(x.get<std::int64_t>())));
            else
                l.emplace_back(parse_rat(x.get<std::string>()));
        }
        cert.lambda.push_back(std::move(l));
    }
    return cert;
}

json coloring_to_json(const Coloring& chi) {
    json j;
    j["group"] = group_to_json(chi.group);
    j["num_colors"] = chi.num_colors;
    j["colors"] = std::vector<int>(chi.colors.begin() + 1, chi.colors.end());
    return j;
}

Coloring coloring_from_json(const json& j) {
    GroupSpec g = group_from_json(j.at("group"));
    auto values = j.at("colors").get<std::vector<int>>();
    Coloring chi = coloring_explicit(g, values);
    if (j.contains("num_colors")) {
        int r = j.at("num_colors").get<int>();
        if (r < chi.num_colors) throw validation_error("num_colors below the largest used color");
        chi.num_colors = r;
    }
    validate_coloring(chi);
    return chi;
}

json basis_to_json(const SkeletonBasis& basis) {
    json j;
    j["ambient"] = group_to_json(basis.ambient);
    j["vectors"] = basis.vectors;
    j["pivots"] = basis.pivots;
    return j;
}

SkeletonBasis basis_from_json(const json& j, bool strict) {
    GroupSpec ambient = group_from_json(j.at("ambient"));
    auto vectors = j.at("vectors").get<std::vector<std::vector<std::int64_t>>>();
    return make_skeleton_basis(ambient, std::move(vectors), strict);
}

json translate_to_json(const Translate& t) {
    SmallGroup sg(t.ambient);
    json j;
    j["ambient"] = group_to_json(t.ambient);
    j["base"] = sg.coords(t.base);
    json gens = json::array();
    for (auto g : t.generators) gens.push_back(sg.coords(g));
    j["generators"] = std::move(gens);
    j["dim"] = t.dim;
    return j;
}

Translate translate_from_json(const GroupSpec& ambient, const json& j) {
    SmallGroup sg(ambient);
    auto rank_of = [&](const json& e) -> std::uint64_t {
        if (e.is_number_integer()) {
            long long r = e.get<long long>();
            if (r < 0 || static_cast<std::uint64_t>(r) >= sg.size())
                throw validation_error("rank out of range");
            return static_cast<std::uint64_t>(r);
        }
        if (e.is_array()) {
            std::vector<std::int64_t> coords = e.get<std::vector<std::int64_t>>();
            return element_rank(make_element(ambient, std::move(coords)));
        }
        throw validation_error("expected a rank or a residue vector");
    };
    std::uint64_t base = j.contains("base") ? rank_of(j.at("base")) : 0;
    std::vector<std::uint64_t> gens;
    for (const auto& e : j.at("generators")) gens.push_back(rank_of(e));
    return make_translate(ambient, base, std::move(gens));
}

json solution_count_to_json(const SolutionCount& sc) {
    json j;
    j["total"] = sc.total.get_str();
    json pc = json::object();
    for (const auto& [c, v] : sc.per_color) pc[std::to_string(c)] = v.get_str();
    j["per_color"] = std::move(pc);
    j["trivial"] = sc.trivial.get_str();
    return j;
}

json reduce_report_to_json(const ReduceReport& rep) {
    json j;
    j["input"] = matrix_to_json(rep.input);
    j["n"] = int_to_json(rep.n);
    j["dk_input"] = int_to_json(rep.dk_input);
    j["identity_shortcut"] = rep.identity_shortcut;
    j["certificate"] = certificate_to_json(rep.cert);
    if (rep.lifted) j["lifted"] = matrix_to_json(*rep.lifted);
    if (!rep.smith_d.empty()) {
        json d = json::array();
        for (const auto& x : rep.smith_d) d.push_back(int_to_json(x));
        j["smith_d"] = std::move(d);
    }
    j["result"] = matrix_to_json(rep.result);
    j["dk_result"] = int_to_json(rep.dk_result);
    j["certificate_on_result"] = certificate_to_json(rep.cert_on_result);
    return j;
}

json min_coloring_report_to_json(const MinColoringReport& rep) {
    json j;
    j["min"] = rep.min_count.get_str();
    j["witness"] = coloring_to_json(rep.witness);
    j["normalizer"] = rep.normalizer.get_str();
    j["empirical_c"] = to_decimal(rep.empirical_c);
    j["exact"] = rep.exact;
    j["candidates_examined"] = rep.candidates_examined;
    return j;
}

json min_subset_report_to_json(const MinSubsetReport& rep) {
    json j;
    j["min"] = rep.min_count.get_str();
    j["witness"] = element_set_to_json(rep.witness);
    j["subset_size"] = rep.subset_size;
    j["exact"] = rep.exact;
    j["candidates_examined"] = rep.candidates_examined;
    return j;
}

json density_witness_to_json(const DensityWitness& w) {
    json j;
    json coeffs = json::array();
    for (const auto& c : w.coeffs) coeffs.push_back(int_to_json(c));
    j["coeffs"] = std::move(coeffs);
    j["alpha"] = int_to_json(w.alpha);
    j["t"] = int_to_json(w.t);
    j["n"] = w.n;
    j["n0"] = w.n0;
    j["x"] = w.x;
    j["size"] = w.x.size();
    j["density_bound"] = to_decimal(w.density_bound);
    j["verified"] = w.verified;
    j["solutions_found"] = w.solutions_found.get_str();
    return j;
}

json fixture6_report_to_json(const Fixture6Report& rep) {
    json j;
    j["N"] = rep.n_power;
    j["group"] = group_to_json(rep.group);
    j["total_solutions"] = rep.total_solutions.get_str();
    j["monochromatic_total"] = rep.monochromatic_total.get_str();
    json pc = json::object();
    for (const auto& [c, v] : rep.per_color) pc[std::to_string(c)] = v.get_str();
    j["per_color"] = std::move(pc);
    j["columns_condition_mod2"] = rep.has_mod2_certificate;
    j["columns_condition_mod4"] = rep.has_mod4_certificate;
    return j;
}

} // namespace rado
