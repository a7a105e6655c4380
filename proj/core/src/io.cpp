#include "scatlab/io.hpp"

#include <json.hpp>

#include "scatlab/errors.hpp"

namespace scatlab {

using json = nlohmann::ordered_json;

namespace {

json series_json(const TruncatedSeries& f)
{
    json arr = json::array();
    for (const auto& [key, c] : f.terms())
        arr.push_back({{"m", {key.m.a, key.m.b}}, {"t", key.k}, {"c", to_string(c)}});
    return arr;
}

TruncatedSeries series_parse(const json& arr, int order)
{
    if (!arr.is_array())
        throw PreconditionError("series must be a JSON array");
    TruncatedSeries f(order);
    for (const auto& term : arr) {
        const auto& m = term.at("m");
        if (!m.is_array() || m.size() != 2)
            throw PreconditionError("series term needs \"m\":[a,b]");
        int k = term.at("t").get<int>();
        if (k > order)
            throw PreconditionError("series term above the declared order");
        f.add_term(k, {m[0].get<std::int64_t>(), m[1].get<std::int64_t>()},
                   parse_rational(term.at("c").get<std::string>()));
    }
    return f;
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string series_to_json(const TruncatedSeries& f)
{
    return series_json(f).dump();
}

TruncatedSeries series_from_json(const std::string& text, int order)
{
    return guarded([&] { return series_parse(json::parse(text), order); });
}

std::string diagram_to_json(const ScatteringDiagram& d, int indent)
{
    json walls = json::array();
    for (const Wall& w : d.sorted_walls())
        walls.push_back({{"dir", {w.direction.a, w.direction.b}}, {"incoming", w.incoming}, {"fn", series_json(w.label)}});
    json doc = {{"order", d.order()}, {"walls", walls}};
    return doc.dump(indent);
}

ScatteringDiagram diagram_from_json(const std::string& text)
{
    return guarded([&] {
        json doc = json::parse(text);
        int order = doc.at("order").get<int>();
        ScatteringDiagram d(order);
        for (const auto& w : doc.at("walls")) {
            const auto& dir = w.at("dir");
            d.add_wall({{dir.at(0).get<std::int64_t>(), dir.at(1).get<std::int64_t>()},
                        w.at("incoming").get<bool>(),
                        series_parse(w.at("fn"), order)});
        }
        return d;
    });
}

} // namespace scatlab
