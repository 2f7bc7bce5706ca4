#include <homcore/json_io.hh>

namespace homcore {

Json to_json(Tri t)
{
    return to_string(t);
}

Json to_json(const SearchStats & stats)
{
    return Json{{"nodes", stats.nodes}, {"budget_exhausted", stats.budget_exhausted}};
}

Json to_json(const VertexMap & map)
{
    return Json(map.map);
}

Json to_json(const MountainSeq & seq)
{
    return Json{{"k", seq.k}, {"peaks", seq.peaks}};
}

Json to_json(const SurjectivityResult & result)
{
    Json j{{"verdict", to_json(result.verdict)},
        {"hom_exists", result.hom_exists},
        {"stats", to_json(result.stats)}};
    if (result.nonsurjective)
        j["nonsurjective_witness"] = to_json(*result.nonsurjective);
    return j;
}

Json to_json(const OrthogonalityReport & report)
{
    return Json{{"verdict", to_json(report.verdict)},
        {"product_size", report.product_size},
        {"onto_left", to_json(report.onto_left)},
        {"onto_right", to_json(report.onto_right)}};
}

Json to_json(const TwoConeReport & report)
{
    return Json{{"left_oriented", report.left_oriented},
        {"right_oriented", report.right_oriented},
        {"incomparable", to_json(report.incomparable)},
        {"orthogonal", to_json(report.orthogonal)},
        {"hypotheses", to_json(report.hypotheses)},
        {"conclusion_checked", report.conclusion_checked},
        {"cone_product_size", report.cone_product_size},
        {"cone_product_is_core", to_json(report.cone_product_is_core)},
        {"overall", to_json(report.overall)},
        {"stats", to_json(report.stats)}};
}

Json to_json(const VscFamilyReport & report)
{
    Json members = Json::array();
    for (const VscMemberReport & m : report.members) {
        Json member{{"index", m.index},
            {"oriented", m.oriented},
            {"is_core", to_json(m.member_is_core)},
            {"incomparable_with_rest", to_json(m.incomparable_with_rest)},
            {"degenerate", m.degenerate},
            {"others_do_not_reach_member", to_json(m.others_do_not_reach_member)},
            {"others_reach_cone", to_json(m.others_reach_cone)},
            {"product_onto_member", to_json(m.product_onto_member)},
            {"stats", to_json(m.stats)}};
        if (m.cone_witness)
            member["cone_witness"] = to_json(*m.cone_witness);
        members.push_back(std::move(member));
    }
    return Json{{"members", std::move(members)},
        {"preconditions", to_json(report.preconditions)},
        {"conditions", to_json(report.conditions)},
        {"direct_core_attempted", report.direct_core_attempted},
        {"cone_product_size", report.cone_product_size},
        {"cone_product_is_core", to_json(report.cone_product_is_core)},
        {"overall", to_json(report.overall)},
        {"stats", to_json(report.stats)}};
}

Json to_json(const MountainFamilyReport & report)
{
    Json members = Json::array();
    for (const OmegaCheck & c : report.members)
        members.push_back(Json{{"d", to_json(c.d)},
            {"omega", to_json(c.omega)},
            {"degenerate", c.degenerate},
            {"separator_by_criterion", c.seq_route_ok},
            {"separator_by_search", to_json(c.engine_route_ok)},
            {"product_independent", to_json(c.product_independent)}});

    Json family = Json::array();
    for (const MountainSeq & m : report.family)
        family.push_back(to_json(m));

    return Json{{"h", report.h},
        {"l", report.l},
        {"family", std::move(family)},
        {"count_fixed_first", report.count_fixed_first},
        {"count_all_decreasing", report.count_all_decreasing},
        {"all_members_cores", to_json(report.all_members_cores)},
        {"members", std::move(members)},
        {"overall", to_json(report.overall)},
        {"stats", to_json(report.stats)}};
}

Json to_json(const GadgetEquivalenceReport & report)
{
    Json j{{"right_underlying_4colorable", to_json(report.right_underlying_4colorable)},
        {"hypothesis_met", report.hypothesis_met},
        {"digraph_hom", to_json(report.digraph_hom)},
        {"gadget_hom", to_json(report.gadget_hom)},
        {"equivalent", to_json(report.equivalent)},
        {"restriction_checked", report.restriction_checked},
        {"restriction_is_hom", to_json(report.restriction_is_hom)},
        {"left_gadget_size", report.left_gadget_size},
        {"right_gadget_size", report.right_gadget_size},
        {"stats", to_json(report.stats)}};
    if (report.digraph_witness)
        j["digraph_witness"] = to_json(*report.digraph_witness);
    if (report.gadget_witness)
        j["gadget_witness"] = to_json(*report.gadget_witness);
    return j;
}

Json to_json(const GadgetGraph & gadget)
{
    Json blocks = Json::array();
    for (const GadgetBlock & b : gadget.blocks)
        blocks.push_back(Json{{"tail", b.arc.from},
            {"head", b.arc.to},
            {"edge_partner", b.fresh[0]},
            {"cycle_interior", {b.fresh[1], b.fresh[2], b.fresh[3], b.fresh[4]}}});
    return Json{{"origin_size", gadget.origin_size},
        {"vertex_count", gadget.graph.size()},
        {"blocks", std::move(blocks)}};
}

Json to_json(const CoreResult & result)
{
    return Json{{"size", result.core.size()},
        {"kept", result.kept},
        {"retraction", to_json(result.retraction)},
        {"certified", result.certified},
        {"stats", to_json(result.stats)}};
}

}
