#include "fundcoef/io.hpp"

#include <fstream>
#include <sstream>

#include "fundcoef/arith.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::io {

namespace {

Json form_json(const bqf::BQF& f) { return Json::array({f.a, f.b, f.c}); }

bqf::BQF form_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 3) throw ParseError("form must be a 3-element array");
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::int64_t>()};
}

Rational value_from_json(const Json& j)
{
    if (!j.is_string()) throw ParseError("value must be a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

void expect_type(const Json& j, const char* type)
{
    if (!j.is_object() || !j.contains("type") || j.at("type") != type) {
        throw ParseError(std::string("expected a table of type '") + type + "'");
    }
}

template <typename F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Json to_json(const jacobi::JacobiCoeffs& phi)
{
    Json entries = Json::array();
    for (const auto& [d, v] : phi.table()) entries.push_back(Json{{"D", d}, {"value", v.to_string()}});
    return Json{{"type", "jacobi"},
                {"weight", phi.weight()},
                {"index", phi.index()},
                {"prec_D", phi.prec_d()},
                {"cusp", phi.cusp()},
                {"entries", std::move(entries)}};
}

Json to_json(const siegel::SiegelForm& f)
{
    Json entries = Json::array();
    for (std::int64_t d = 3; d < f.prec_disc(); ++d) {
        if (!arith::is_discriminant(-d)) continue;
        for (const auto& s : bqf::reduced_forms(d)) {
            entries.push_back(Json{{"form", form_json(s)}, {"value", f.coefficient(s).to_string()}});
        }
    }
    return Json{{"type", "siegel"},
                {"weight", f.weight()},
                {"level", f.level()},
                {"prec_disc", f.prec_disc()},
                {"entries", std::move(entries)}};
}

Json to_json(const HalfIntegralForm& f)
{
    Json entries = Json::array();
    for (std::int64_t n = 1; n < f.prec(); ++n) {
        if (!f.coeff(n).is_zero()) entries.push_back(Json{{"n", n}, {"value", f.coeff(n).to_string()}});
    }
    return Json{{"type", "half-integral"},
                {"kappa", f.kappa()},
                {"level", f.level()},
                {"prec", f.prec()},
                {"entries", std::move(entries)}};
}

Json to_json(const bqf::ClassGroup& g)
{
    Json reduced = Json::array();
    for (const auto& f : g.reduced()) reduced.push_back(form_json(f));
    Json gens = Json::array();
    for (const auto& gen : g.generators()) gens.push_back(Json{{"index", gen.index}, {"order", gen.order}});
    return Json{{"disc", g.disc()}, {"h", g.h()}, {"reduced", std::move(reduced)}, {"generators", std::move(gens)}};
}

Json to_json(const analysis::ScanReport& r)
{
    Json hits = Json::array();
    for (const auto d : r.hits) {
        const auto& w = r.witnesses.at(d);
        Json witness = std::holds_alternative<bqf::BQF>(w.where) ? form_json(std::get<bqf::BQF>(w.where))
                                                                 : Json(std::get<std::int64_t>(w.where));
        hits.push_back(Json{{"d", d}, {"witness", std::move(witness)}, {"value", w.value.to_string()}});
    }
    return Json{{"X", r.x}, {"hits", std::move(hits)}};
}

std::string to_csv(const analysis::ScanReport& r)
{
    std::ostringstream os;
    os << "d,witness,value\n";
    for (const auto d : r.hits) {
        const auto& w = r.witnesses.at(d);
        os << d << ',';
        if (const auto* f = std::get_if<bqf::BQF>(&w.where)) {
            os << f->a << ' ' << f->b << ' ' << f->c;
        } else {
            os << std::get<std::int64_t>(w.where);
        }
        os << ',' << w.value.to_string() << '\n';
    }
    return os.str();
}

jacobi::JacobiCoeffs jacobi_from_json(const Json& j)
{
    return guarded([&] {
        expect_type(j, "jacobi");
        if (j.value("index", 1) != 1) throw InvariantError("only index-1 Jacobi tables are supported");
        std::map<std::int64_t, Rational> table;
        for (const auto& e : j.at("entries")) {
            const auto d = e.at("D").get<std::int64_t>();
            if (!table.emplace(d, value_from_json(e.at("value"))).second) {
                throw InvariantError("duplicate Jacobi entry at D = " + std::to_string(d));
            }
        }
        return jacobi::JacobiCoeffs(j.at("weight").get<int>(), j.at("prec_D").get<std::int64_t>(), std::move(table),
                                    j.value("cusp", true));
    });
}

siegel::SiegelForm siegel_from_json(const Json& j)
{
    return guarded([&] {
        expect_type(j, "siegel");
        std::map<bqf::BQF, Rational> table;
        std::int64_t max_disc = 0;
        for (const auto& e : j.at("entries")) {
            const auto f = form_from_json(e.at("form"));
            if (!bqf::is_reduced(f)) throw InvariantError("Siegel table key is not a reduced form");
            max_disc = std::max(max_disc, -f.disc());
            if (!table.emplace(f, value_from_json(e.at("value"))).second) {
                throw InvariantError("duplicate Siegel table entry");
            }
        }
        const std::int64_t prec = j.contains("prec_disc") ? j.at("prec_disc").get<std::int64_t>() : max_disc + 1;
        return siegel::from_table(j.at("weight").get<int>(), j.at("level").get<std::int64_t>(), prec, std::move(table));
    });
}

HalfIntegralForm half_from_json(const Json& j)
{
    return guarded([&] {
        expect_type(j, "half-integral");
        std::int64_t max_n = 0;
        for (const auto& e : j.at("entries")) max_n = std::max(max_n, e.at("n").get<std::int64_t>());
        const std::int64_t prec = j.contains("prec") ? j.at("prec").get<std::int64_t>() : max_n + 1;
        if (max_n >= prec) throw InvariantError("half-integral entry beyond prec");
        HalfIntegralForm f(j.at("kappa").get<int>(), j.at("level").get<std::int64_t>(), prec);
        for (const auto& e : j.at("entries")) {
            const auto n = e.at("n").get<std::int64_t>();
            if (n < 1) throw InvariantError("half-integral entry with n < 1");
            f.set_coeff(n, value_from_json(e.at("value")));
        }
        return f;
    });
}

Table table_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw ParseError("table has no \"type\" field");
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "jacobi") return jacobi_from_json(j);
    if (type == "siegel") return siegel_from_json(j);
    if (type == "half-integral") return half_from_json(j);
    throw ParseError("unknown table type '" + type + "'");
}

Table load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return table_from_json(j);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

} // namespace fundcoef::io
