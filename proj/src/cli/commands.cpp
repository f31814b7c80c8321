#include "casson/cli/commands.hpp"

#include "casson/errors.hpp"

namespace casson::cli {

namespace {

std::vector<Integer> to_integers(const std::vector<long>& xs)
{
    return {xs.begin(), xs.end()};
}

bool murasugi_holds(const LaurentPolynomial& delta, bool arf)
{
    const Integer r = mod(delta.at_minus_one(), 8);
    return arf == !(r == 1 || r == 7);
}

std::string pattern_text(const SignPattern& p)
{
    bool any = false, all_minus = true, all_plus = true;
    for (int e : p) {
        if (e == 0)
            continue;
        any = true;
        all_minus &= e < 0;
        all_plus &= e > 0;
    }
    if (any && all_minus)
        return "minus-identity";
    if (any && all_plus)
        return "identity";
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k)
        s += std::string(k ? "," : "") + (p[k] < 0 ? "-" : p[k] > 0 ? "+" : "0");
    return s + ")";
}

} // namespace

InvariantReport knot_report(const KnotInput& in)
{
    const auto& s = in.knot.matrix;
    InvariantReport r;
    r.command = "knot";
    r.label = in.knot.name;
    const auto delta = alexander_polynomial(s);
    const bool arf = arf_invariant(s);
    const Integer d2 = second_derivative_at_one(delta);
    r.add("genus", Integer(static_cast<long>(s.genus())));
    r.add("alexander_at_minus_one", delta.at_minus_one());
    r.add("alexander_d2", d2);
    r.add("arf", arf);
    r.add("signature", Integer(tl_signature(s, 1, 2)));
    for (int n : in.orders) {
        const auto spec = signature_spectrum(s, n);
        spec.validate();
        r.add("spectrum_" + std::to_string(n), to_integers(spec.values));
    }
    r.add_text("alexander", delta.to_string());
    r.flag("d2_half_equiv_arf", mod(d2 / 2, 2) == (arf ? 1 : 0));
    r.flag("murasugi", murasugi_holds(delta, arf));
    return r;
}

InvariantReport sphere_report(const SurgeryPresentation& p)
{
    InvariantReport r;
    r.command = "sphere";
    r.label = std::to_string(p.steps.size()) + "-step presentation";
    const auto inv = check_casson_rohlin(p);
    r.add("casson", inv.casson);
    r.add("rohlin", inv.rohlin);
    r.flag("casson_equiv_rohlin", inv.congruent);
    const auto rev = p.reversed();
    r.flag("reversal_antisymmetry", casson(rev) == -inv.casson && rohlin(rev) == inv.rohlin);
    return r;
}

CommandResult mapping_torus_report(const MappingTorusInput& in)
{
    CommandResult out;
    auto& r = out.report;
    r.command = "mapping-torus";
    const bool branched = std::holds_alternative<BranchedQuotientData>(in.data);
    r.label = std::string(branched ? "branched" : "free") + " " + in.branch_name;
    const Rational lfo = furuta_ohta_mapping_torus(in.data);
    const bool integral = is_integral(lfo);
    r.add("lambda_fo", lfo);
    r.add("integral", integral);
    r.flag("orientation_antisymmetry", orientation_reversal_check(in.data));
    if (branched) {
        const auto& d = std::get<BranchedQuotientData>(in.data);
        r.add("spectrum", to_integers(d.spectrum.values));
        r.flag("folded_sum_agrees", folded_spectrum_term(d.spectrum) == make_rational(d.spectrum.total(), 8));
    }
    if (!integral) {
        r.note("lambda_FO is not an integer; the quotient data cannot come from a finite-order diffeomorphism");
        out.input_rejected = true;
        return out;
    }
    if (in.rho) {
        const auto rep = conjecture1_check(in.data, *in.rho);
        r.add("rho", rep.rho);
        r.flag("lambda_fo_equiv_rho", rep.congruent);
    }
    if (in.floer_ranks) {
        const Integer lef = 2 * lfo.get_num();
        r.add("lefschetz", lef);
        try {
            const auto p = deduce_sign_pattern(*in.floer_ranks, to_int64(lef));
            r.add_text("pattern", pattern_text(p));
        } catch (const AmbiguousSignPattern& e) {
            r.add_text("pattern", "ambiguous");
            for (const auto& c : e.candidates())
                r.note("candidate pattern " + pattern_text(c));
        }
    }
    return out;
}

InvariantReport floer_report(const FloerData& f)
{
    InvariantReport r;
    r.command = "floer";
    std::vector<Integer> ranks(f.ranks.begin(), f.ranks.end());
    r.add("ranks", ranks);
    const Integer lef = lefschetz(f);
    r.add("lefschetz", lef);
    const bool even = check_evenness(f);
    r.flag("lefschetz_even", even);
    if (even)
        r.add("lambda_fo", lambda_fo_from_lefschetz(f));
    else
        r.note("odd Lefschetz number: the data cannot come from a homology cobordism");
    return r;
}

InvariantReport torus_report(const TorusInput& in)
{
    InvariantReport r;
    r.command = "torus4";
    r.label = in.name;
    const auto& ring = in.ring;
    const bool det = det4(ring);
    r.add("det4", det);
    if (in.w) {
        const H2Class w = *in.w;
        r.add("w", Integer(static_cast<long>(w)));
        const long count = four_orbit_count(ring, w);
        r.add("four_orbit_count", Integer(count));
        r.add("xi_hypothesis", xi_hypothesis_holds(ring, w));
        const auto pq = pontryagin_square_parity(ring, w);
        r.add_text("pontryagin_square_parity", pq ? (*pq ? "1" : "0") : "undetermined");
        const bool adm = admissible(ring, w);
        r.add("admissible", adm);
        const auto census = orbit_order_census(ring, w);
        r.flag("no_small_orbits", census.small_orbits_absent);
        r.add_text("eight_orbits", "not modelled");
        r.add_text("sixteen_orbits", "not modelled");
        if (adm) {
            r.add("donaldson_mod2", donaldson_mod2(ring, w));
            r.flag("parity_law", (count % 2 == 1) == det);
        } else {
            r.note("w is not the w_2 of a bundle satisfying the hypotheses; parity law not asserted");
        }
    } else {
        long n = 0;
        bool law = true;
        std::vector<Integer> counts;
        for (unsigned w = 1; w < (1u << kH2Rank); ++w) {
            if (!admissible(ring, static_cast<H2Class>(w)))
                continue;
            ++n;
            const long c = four_orbit_count(ring, static_cast<H2Class>(w));
            counts.emplace_back(c);
            law &= (c % 2 == 1) == det;
        }
        r.add("admissible_classes", Integer(n));
        r.add("four_orbit_counts", counts);
        r.flag("parity_law", law);
    }
    if (in.rohlin_table) {
        const bool rb = rho_bar(*in.rohlin_table);
        r.add("rho_bar", rb);
        r.flag("rho_bar_equals_det", rb == det);
    }
    return r;
}

InvariantReport circle_bundle_report(const CircleBundleData& d, const std::string& knot_name)
{
    InvariantReport r;
    r.command = "circle-bundle";
    r.label = knot_name;
    const auto rho = circle_bundle_rho(d);
    const auto fo = circle_bundle_furuta_ohta(d);
    r.add("euler", d.euler);
    r.add("rho", rho.value != 0);
    r.add("lambda_fo", fo.value);
    r.add("arf", rho.certificate.arf);
    r.add("alexander_d2", fo.certificate.alexander_second_derivative);
    r.add_text("alexander", rho.certificate.alexander.to_string());
    r.flag("lambda_fo_equiv_rho", mod(fo.value, 2) == (rho.value != 0 ? 1 : 0));
    for (const auto& n : rho.certificate.notes)
        r.note(n);
    r.note(fo.certificate.notes.back());
    return r;
}

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"knot", "sphere", "mapping-torus", "floer", "torus4", "circle-bundle"};
    return names;
}

CommandResult run_command(const std::string& command, const std::string& text)
{
    const Json j = parse_document(text);
    CommandResult out;
    if (command == "knot") {
        out.report = knot_report(parse_knot_input(j));
    } else if (command == "sphere") {
        out.report = sphere_report(parse_sphere_input(j));
    } else if (command == "mapping-torus") {
        out = mapping_torus_report(parse_mapping_torus_input(j));
    } else if (command == "floer") {
        out.report = floer_report(parse_floer_input(j));
    } else if (command == "torus4") {
        out.report = torus_report(parse_torus_input(j));
    } else if (command == "circle-bundle") {
        std::string name;
        const auto d = parse_circle_bundle_input(j, &name);
        out.report = circle_bundle_report(d, name);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown command \"" + command + "\"");
    }
    out.report.input_digest = digest(text);
    return out;
}

} // namespace casson::cli
