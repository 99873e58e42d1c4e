// roundtrip.hpp -- the executable round-trip fidelity check. A codec
// may lose expressiveness on the first trip; from the second trip on,
// nothing may change.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ore/model.hpp"

namespace ore {

/// Serialize/parse pair under test. serialize() reports the triples it
/// could not carry; parse() must accept serialize()'s output.
class Codec {
public:
    virtual ~Codec() = default;
    virtual std::string name() const = 0;

    struct Output {
        std::string bytes;
        std::vector<Triple> dropped;
    };
    virtual Output serialize(const ResourceMapGraph& g) const = 0;
    virtual ResourceMapGraph parse(const std::string& bytes) const = 0;
};

std::unique_ptr<Codec> make_atom_codec();
std::unique_ptr<Codec> make_ntriples_codec();

struct RoundTripReport {
    std::vector<Triple> first_trip_dropped; // model triples lost on trip 1
    std::vector<Triple> declared_dropped;   // what the codec said it dropped
    bool stable_after_second = false;       // trip-1 model == trip-2 model == trip-3 model
    int trips_executed = 0;
};

/// Runs model -> bytes -> model three times. Stability compares the
/// models after trips 1, 2 and 3; one trip beyond the required pair is
/// cheap and catches oscillation. Codec failures propagate with the
/// trip index attached.
RoundTripReport fixpoint_check(const ResourceMapGraph& g, const Codec& codec);

std::string to_text(const RoundTripReport& report);
std::string to_json(const RoundTripReport& report);

} // namespace ore
