#include "ore/roundtrip.hpp"

#include <json.hpp>

#include "ore/atom.hpp"
#include "ore/error.hpp"
#include "ore/ntriples.hpp"

namespace ore {

namespace {

class AtomCodec final : public Codec {
public:
    std::string name() const override { return "atom"; }

    Output serialize(const ResourceMapGraph& g) const override {
        atom::Serialized s = atom::to_atom(g);
        return {std::move(s.bytes), std::move(s.dropped)};
    }

    ResourceMapGraph parse(const std::string& bytes) const override {
        return atom::from_atom(bytes);
    }
};

class NTriplesCodec final : public Codec {
public:
    std::string name() const override { return "ntriples"; }

    Output serialize(const ResourceMapGraph& g) const override {
        return {ntriples::to_ntriples(g), {}};
    }

    ResourceMapGraph parse(const std::string& bytes) const override {
        return ntriples::from_ntriples(bytes);
    }
};

nlohmann::json triple_json(const Triple& t) {
    nlohmann::json j;
    j["subject"] = t.subject.str();
    j["predicate"] = t.predicate.str();
    if (t.object.is_iri()) {
        j["object"] = t.object.iri().str();
    } else {
        j["object"] = t.object.literal().lexical;
        j["object_is_literal"] = true;
        if (t.object.literal().datatype) j["datatype"] = t.object.literal().datatype->str();
    }
    return j;
}

} // namespace

std::unique_ptr<Codec> make_atom_codec() { return std::make_unique<AtomCodec>(); }
std::unique_ptr<Codec> make_ntriples_codec() { return std::make_unique<NTriplesCodec>(); }

RoundTripReport fixpoint_check(const ResourceMapGraph& g, const Codec& codec) {
    RoundTripReport report;
    auto trip = [&](const ResourceMapGraph& in, int index) -> ResourceMapGraph {
        try {
            Codec::Output out = codec.serialize(in);
            if (index == 1) report.declared_dropped = out.dropped;
            ResourceMapGraph parsed = codec.parse(out.bytes);
            report.trips_executed = index;
            return parsed;
        } catch (const Error& e) {
            throw Error(e.kind(),
                        "trip " + std::to_string(index) + " (" + codec.name() + "): " + e.what());
        }
    };

    ResourceMapGraph g1 = trip(g, 1);
    report.first_trip_dropped = triples_missing_from(g, g1);
    ResourceMapGraph g2 = trip(g1, 2);
    ResourceMapGraph g3 = trip(g2, 3);
    report.stable_after_second = graph_equal(g1, g2) && graph_equal(g2, g3);
    return report;
}

std::string to_text(const RoundTripReport& report) {
    std::string out;
    out += "trips executed: " + std::to_string(report.trips_executed) + "\n";
    out += "first-trip dropped: " + std::to_string(report.first_trip_dropped.size()) + "\n";
    for (const Triple& t : report.first_trip_dropped) {
        out += "  " + t.subject.str() + " " + t.predicate.str() + " " +
               (t.object.is_iri() ? t.object.iri().str()
                                  : "\"" + t.object.literal().lexical + "\"") +
               "\n";
    }
    out += std::string("stable after second trip: ") +
           (report.stable_after_second ? "yes" : "NO") + "\n";
    return out;
}

std::string to_json(const RoundTripReport& report) {
    nlohmann::json doc;
    doc["trips_executed"] = report.trips_executed;
    doc["stable_after_second"] = report.stable_after_second;
    doc["first_trip_dropped"] = nlohmann::json::array();
    for (const Triple& t : report.first_trip_dropped) {
        doc["first_trip_dropped"].push_back(triple_json(t));
    }
    doc["declared_dropped"] = nlohmann::json::array();
    for (const Triple& t : report.declared_dropped) {
        doc["declared_dropped"].push_back(triple_json(t));
    }
    return doc.dump(2) + "\n";
}

} // namespace ore
