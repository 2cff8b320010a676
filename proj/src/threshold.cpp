#include "satkit/threshold.hpp"

#include <algorithm>

namespace satkit {

ThresholdSequence parse_sequence(std::string_view text) {
    ThresholdSequence seq;
    seq.reserve(text.size());
    for (char c : text) {
        if (c == 'I' || c == 'i')
            seq.push_back(Step::Isolated);
        else if (c == 'D' || c == 'd')
            seq.push_back(Step::Dominating);
        else
            throw std::invalid_argument(std::string("invalid sequence character '") + c +
                                        "' (expected I or D)");
    }
    return seq;
}

std::string to_string(const ThresholdSequence& seq) {
    std::string out;
    out.reserve(seq.size());
    for (Step s : seq) out.push_back(s == Step::Isolated ? 'I' : 'D');
    return out;
}

Graph build(const ThresholdSequence& seq) {
    Graph g = complete(1);
    for (Step s : seq)
        g = (s == Step::Isolated) ? add_isolated(g) : add_dominating(g);
    return g;
}

std::optional<ThresholdSequence> recognize(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("recognize needs at least one vertex");
    VertexSet alive = (g.order() == 31) ? ~VertexSet{0} : ((VertexSet{1} << g.order()) - 1);
    int count = g.order();
    ThresholdSequence reversed;
    while (count > 1) {
        int pick = -1;
        Step step{};
        for (int v = 0; v < g.order(); ++v) {
            if (!((alive >> v) & 1)) continue;
            if (g.degree_in(v, alive) == 0) {
                pick = v;
                step = Step::Isolated;
                break;
            }
        }
        if (pick < 0) {
            for (int v = 0; v < g.order(); ++v) {
                if (!((alive >> v) & 1)) continue;
                if (g.degree_in(v, alive) == count - 1) {
                    pick = v;
                    step = Step::Dominating;
                    break;
                }
            }
        }
        if (pick < 0) return std::nullopt;
        alive &= ~(VertexSet{1} << pick);
        --count;
        reversed.push_back(step);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

AutomatonState step_automaton(const AutomatonState& s, Step step) {
    AutomatonState next = s;
    next.k = s.k + 1;
    if (step == Step::Isolated) {
        next.has_isolated = true;
        return next;
    }
    next.has_isolated = false;
    bool weight_shift = !s.has_isolated || (s.wt && *s.wt <= s.k - 2);
    if (weight_shift) {
        next.wt = *s.wt + 2;
        next.satlim = *s.satlim + 1;
    } else {
        next.wt = s.k;
        next.satlim = Rational{s.k - 1, 2};
    }
    return next;
}

AutomatonState threshold_weight(const ThresholdSequence& seq) {
    AutomatonState s = AutomatonState::initial();
    for (Step step : seq) s = step_automaton(s, step);
    return s;
}

}  // namespace satkit
