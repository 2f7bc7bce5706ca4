#ifndef HOMCORE_JSON_IO_HH
#define HOMCORE_JSON_IO_HH

#include <homcore/cone_orth.hh>
#include <homcore/core.hh>
#include <homcore/digraph.hh>
#include <homcore/gadget.hh>
#include <homcore/mountains.hh>
#include <homcore/search.hh>

#include <json.hpp>

namespace homcore {

// Insertion-ordered JSON keeps report output byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(Tri t);
Json to_json(const SearchStats & stats);
Json to_json(const VertexMap & map);
Json to_json(const MountainSeq & seq);
Json to_json(const SurjectivityResult & result);
Json to_json(const OrthogonalityReport & report);
Json to_json(const TwoConeReport & report);
Json to_json(const VscFamilyReport & report);
Json to_json(const MountainFamilyReport & report);
Json to_json(const GadgetEquivalenceReport & report);
Json to_json(const GadgetGraph & gadget); // sidecar: origin vertices and blocks
Json to_json(const CoreResult & result);

}

#endif
