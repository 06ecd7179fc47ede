#include "smobs/attack_signal.hpp"

#include <cmath>

#include "smobs/errors.hpp"

namespace smobs {

void AttackSignal::check_channel(int channel) const {
    if (channel < 0 || channel >= dim_)
        throw DimensionMismatch("AttackSignal: channel out of range");
}

void AttackSignal::add_step(int channel, double t0, double amplitude) {
    check_channel(channel);
    terms_.push_back({Term::Step, channel, amplitude, 0.0, 0.0, t0, 0});
}

void AttackSignal::add_sine(int channel, double amplitude, double angular_freq, double phase, double gate_t0) {
    check_channel(channel);
    terms_.push_back({Term::Sine, channel, amplitude, angular_freq, phase, gate_t0, 0});
}

void AttackSignal::add_constant(int channel, double value, double gate_t0) {
    check_channel(channel);
    terms_.push_back({Term::Constant, channel, value, 0.0, 0.0, gate_t0, 0});
}

void AttackSignal::add_state_feedback(int channel, int state_index, double coeff) {
    check_channel(channel);
    terms_.push_back({Term::StateFeedback, channel, coeff, 0.0, 0.0, 0.0, state_index});
    has_feedback_ = true;
}

Vector AttackSignal::eval(double t) const {
    if (has_feedback_)
        throw Error("AttackSignal: state-feedback term requires the state overload");
    return eval(t, Vector());
}

Vector AttackSignal::eval(double t, const Vector& state) const {
    Vector out = Vector::Zero(dim_);
    for (const auto& term : terms_) {
        switch (term.kind) {
            case Term::Step:
                if (t >= term.t0) out(term.channel) += term.a;
                break;
            case Term::Sine:
                if (t >= term.t0) out(term.channel) += term.a * std::sin(term.omega * t + term.phase);
                break;
            case Term::Constant:
                if (t >= term.t0) out(term.channel) += term.a;
                break;
            case Term::StateFeedback:
                if (term.state_index >= state.size())
                    throw DimensionMismatch("AttackSignal: feedback index outside supplied state");
                out(term.channel) += term.a * state(term.state_index);
                break;
        }
    }
    return out;
}

}  // namespace smobs
