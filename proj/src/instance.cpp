#include "dbr/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dbr {

using nlohmann::json;

namespace {

std::vector<std::pair<std::string, std::string>> parse_combo(const json& j,
                                                             const std::string& where)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.is_array())
        throw input_error(where + ": expected an array of [name, rational] pairs");
    for (auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw input_error(where + ": expected [name, rational] pairs");
        out.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    return out;
}

std::vector<MvTermData> parse_mv(const json& j, const std::string& where)
{
    std::vector<MvTermData> out;
    if (!j.is_array())
        throw input_error(where + ": expected an array of terms");
    for (auto& entry : j) {
        MvTermData term;
        term.coeff = entry.at("coeff").get<std::string>();
        term.monomial = entry.at("monomial").get<std::vector<int>>();
        if (entry.contains("indices"))
            term.indices = entry.at("indices").get<std::vector<int>>();
        out.push_back(std::move(term));
    }
    return out;
}

json combo_json(const std::vector<std::pair<std::string, std::string>>& combo)
{
    json out = json::array();
    for (auto& [name, coeff] : combo)
        out.push_back(json::array({name, coeff}));
    return out;
}

} // namespace

InstanceData parse_instance(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    InstanceData data;
    try {
        if (j.contains("basis")) {
            data.has_algebra = true;
            for (auto& entry : j.at("basis"))
                data.basis.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<int>());
            for (auto& entry : j.value("brackets", json::array())) {
                InstanceData::BracketEntry b;
                b.x = entry.at("x").get<std::string>();
                b.y = entry.at("y").get<std::string>();
                b.result = parse_combo(entry.at("result"), "brackets");
                data.brackets.push_back(std::move(b));
            }
            for (auto& name : j.value("abelian", json::array()))
                data.abelian.push_back(name.get<std::string>());
            if (j.contains("P"))
                data.p_element = parse_combo(j.at("P"), "P");
            if (j.contains("Ehat")) {
                data.ehat_degree = j.at("Ehat").value("degree", 1);
                for (auto& [name, col] : j.at("Ehat").at("columns").items())
                    data.ehat_cols[name] = parse_combo(col, "Ehat");
            }
        }
        if (j.contains("mt")) {
            for (auto& entry : j.at("mt")) {
                MtEntryData e;
                e.order = entry.at("order").get<int>();
                if (entry.contains("inner"))
                    e.inner = parse_combo(entry.at("inner"), "mt");
                if (entry.contains("map")) {
                    std::map<std::string, std::vector<std::pair<std::string, std::string>>> cols;
                    for (auto& [name, col] : entry.at("map").at("columns").items())
                        cols[name] = parse_combo(col, "mt map");
                    e.map = std::move(cols);
                }
                data.mt.push_back(std::move(e));
            }
        }
        if (j.contains("poisson")) {
            data.has_poisson = true;
            auto& p = j.at("poisson");
            data.dim = p.at("dim").get<int>();
            data.tangent = p.at("tangent").get<int>();
            data.normal_trunc = p.value("D", 1);
            data.tangential_trunc = p.value("D_tan", 1);
            data.bivector = parse_mv(p.at("bivector"), "bivector");
            for (auto& entry : p.value("flow", json::array()))
                data.flow.emplace_back(entry.at("order").get<int>(),
                                       parse_mv(entry.at("field"), "flow"));
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed instance file: ") + e.what());
    }
    if (data.has_algebra == data.has_poisson)
        throw input_error("exactly one of the algebra sections or the poisson section "
                          "must be present");
    return data;
}

InstanceData load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string emit_instance(const InstanceData& data)
{
    json j;
    if (data.has_algebra) {
        json basis = json::array();
        for (auto& [name, deg] : data.basis)
            basis.push_back(json::array({name, deg}));
        j["basis"] = std::move(basis);
        json brackets = json::array();
        for (auto& b : data.brackets)
            brackets.push_back({{"x", b.x}, {"y", b.y}, {"result", combo_json(b.result)}});
        j["brackets"] = std::move(brackets);
        j["abelian"] = data.abelian;
        if (!data.p_element.empty())
            j["P"] = combo_json(data.p_element);
        if (data.ehat_degree) {
            json cols;
            for (auto& [name, col] : data.ehat_cols)
                cols[name] = combo_json(col);
            j["Ehat"] = {{"degree", *data.ehat_degree}, {"columns", std::move(cols)}};
        }
    }
    if (!data.mt.empty()) {
        json mt = json::array();
        for (auto& e : data.mt) {
            json entry;
            entry["order"] = e.order;
            if (e.inner)
                entry["inner"] = combo_json(*e.inner);
            if (e.map) {
                json cols;
                for (auto& [name, col] : *e.map)
                    cols[name] = combo_json(col);
                entry["map"] = {{"columns", std::move(cols)}};
            }
            mt.push_back(std::move(entry));
        }
        j["mt"] = std::move(mt);
    }
    if (data.has_poisson) {
        json terms = json::array();
        for (auto& t : data.bivector)
            terms.push_back(
                {{"coeff", t.coeff}, {"monomial", t.monomial}, {"indices", t.indices}});
        json p = {{"dim", data.dim},
                  {"tangent", data.tangent},
                  {"D", data.normal_trunc},
                  {"D_tan", data.tangential_trunc},
                  {"bivector", std::move(terms)}};
        if (!data.flow.empty()) {
            json flow = json::array();
            for (auto& [order, field] : data.flow) {
                json terms2 = json::array();
                for (auto& t : field)
                    terms2.push_back(
                        {{"coeff", t.coeff}, {"monomial", t.monomial}, {"indices", t.indices}});
                flow.push_back({{"order", order}, {"field", std::move(terms2)}});
            }
            p["flow"] = std::move(flow);
        }
        j["poisson"] = std::move(p);
    }
    return j.dump(2) + "\n";
}

namespace {

Vec combo_to_vec(const GradedBasis& basis,
                 const std::vector<std::pair<std::string, std::string>>& combo)
{
    Vec out;
    for (auto& [name, coeff] : combo)
        out.add_term(basis.require(name), parse_rat(coeff));
    return out;
}

PolyMv terms_to_mv(int dim, const std::vector<MvTermData>& terms)
{
    PolyMv out(dim);
    for (auto& t : terms) {
        if (static_cast<int>(t.monomial.size()) != dim)
            throw input_error("monomial exponent vector has wrong length");
        MvKey k;
        k.expo = t.monomial;
        for (int i : t.indices) {
            if (i < 1 || i > dim)
                throw input_error("derivation index out of range");
            k.idx.push_back(i - 1);
        }
        for (size_t i = 1; i < k.idx.size(); ++i)
            if (k.idx[i] <= k.idx[i - 1])
                throw input_error("derivation indices must be strictly increasing");
        out.add_term(k, parse_rat(t.coeff));
    }
    return out;
}

TimeDerivation materialize_mt(const VAlgebra& V, const std::vector<MtEntryData>& entries)
{
    TimeDerivation mt;
    if (entries.empty())
        return mt;
    int top = 0;
    for (auto& e : entries)
        top = std::max(top, e.order);
    mt.coeff.assign(top + 1, LinMap{});
    mt.inner.assign(top + 1, std::nullopt);
    for (auto& e : entries) {
        if (e.order < 0)
            throw input_error("negative mt order");
        LinMap m;
        m.degree = 0;
        if (e.inner) {
            Vec y = combo_to_vec(V.basis(), *e.inner);
            for (int i = 0; i < V.basis().size(); ++i)
                m.set_col(i, V.gla.bracket(y, basis_vec(i)));
            mt.inner[e.order] = std::move(y);
        }
        if (e.map) {
            for (auto& [name, col] : *e.map)
                m.set_col(V.basis().require(name), combo_to_vec(V.basis(), col));
        }
        mt.coeff[e.order] = std::move(m);
    }
    return mt;
}

} // namespace

Instance materialize(const InstanceData& data)
{
    Instance inst;
    if (data.has_poisson) {
        SubmanifoldContext ctx;
        ctx.dim = data.dim;
        ctx.tangent_count = data.tangent;
        ctx.normal_trunc = data.normal_trunc;
        ctx.tangential_trunc = data.tangential_trunc;
        PoissonModel model = build_valgebra(ctx);
        inst.pi = terms_to_mv(ctx.dim, data.bivector);
        inst.V = model.V;
        inst.E.degree = 1;
        inst.E.ehat.degree = 1;
        inst.E.p_element = model.to_vec(*inst.pi);
        std::vector<PolyMv> field;
        for (auto& [order, terms] : data.flow) {
            if (order >= static_cast<int>(field.size()))
                field.resize(order + 1, PolyMv(ctx.dim));
            field[order] += terms_to_mv(ctx.dim, terms);
        }
        if (!field.empty())
            inst.mt = embedding_flow(model, field);
        inst.model = std::move(model);
        return inst;
    }

    GLA gla;
    gla.basis = GradedBasis(data.basis);
    for (auto& b : data.brackets) {
        int i = gla.basis.require(b.x);
        int j = gla.basis.require(b.y);
        if (i > j)
            throw input_error("bracket entry [" + b.x + "," + b.y +
                              "] must be listed with x before y in basis order");
        gla.set_bracket(i, j, combo_to_vec(gla.basis, b.result));
    }
    std::vector<int> a_indices;
    for (auto& name : data.abelian)
        a_indices.push_back(gla.basis.require(name));
    inst.V = VAlgebra::make(std::move(gla), std::move(a_indices));
    inst.E.p_element = combo_to_vec(inst.V.basis(), data.p_element);
    auto pd = homogeneous_degree(inst.V.basis(), inst.E.p_element);
    inst.E.degree = data.ehat_degree ? *data.ehat_degree : (pd ? *pd : 1);
    inst.E.ehat.degree = inst.E.degree;
    for (auto& [name, col] : data.ehat_cols)
        inst.E.ehat.set_col(inst.V.basis().require(name), combo_to_vec(inst.V.basis(), col));
    inst.mt = materialize_mt(inst.V, data.mt);
    return inst;
}

namespace {

std::vector<std::pair<std::string, std::string>> vec_to_combo(const GradedBasis& basis,
                                                              const Vec& v)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& [i, c] : v.terms)
        out.emplace_back(basis.name(i), format_rat(c));
    return out;
}

} // namespace

InstanceData algebra_instance(const VAlgebra& V, const DerivationSpec* E,
                              const TimeDerivation* mt)
{
    InstanceData data;
    data.has_algebra = true;
    const auto& basis = V.basis();
    for (int i = 0; i < basis.size(); ++i)
        data.basis.emplace_back(basis.name(i), basis.degree(i));
    for (auto& [ij, v] : V.gla.table) {
        InstanceData::BracketEntry b;
        b.x = basis.name(ij.first);
        b.y = basis.name(ij.second);
        b.result = vec_to_combo(basis, v);
        data.brackets.push_back(std::move(b));
    }
    for (int i : V.a_indices)
        data.abelian.push_back(basis.name(i));
    if (E) {
        data.p_element = vec_to_combo(basis, E->p_element);
        if (!E->ehat.cols.empty()) {
            data.ehat_degree = E->degree;
            for (auto& [i, col] : E->ehat.cols)
                data.ehat_cols[basis.name(i)] = vec_to_combo(basis, col);
        }
    }
    if (mt) {
        for (int k = 0; k <= mt->order(); ++k) {
            MtEntryData e;
            e.order = k;
            if (mt->inner.size() > static_cast<size_t>(k) && mt->inner[k]) {
                e.inner = vec_to_combo(basis, *mt->inner[k]);
            } else {
                std::map<std::string, std::vector<std::pair<std::string, std::string>>> cols;
                for (auto& [i, col] : mt->coeff[k].cols)
                    cols[basis.name(i)] = vec_to_combo(basis, col);
                e.map = std::move(cols);
            }
            data.mt.push_back(std::move(e));
        }
    }
    return data;
}

} // namespace dbr
