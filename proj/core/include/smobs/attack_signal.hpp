#pragma once

#include <vector>

#include "smobs/linalg.hpp"

namespace smobs {

/// Declarative multi-channel attack waveform: per channel, a sum of gated
/// steps, sinusoids and constants. Channels with no terms evaluate to 0.
/// An optional state-feedback term (-coeff * state[index]) supports the
/// measurement-replacement scenario; evaluating a signal that carries one
/// requires the state overload.
class AttackSignal {
public:
    explicit AttackSignal(int channels = 0) : dim_(channels) {}

    void add_step(int channel, double t0, double amplitude);
    void add_sine(int channel, double amplitude, double angular_freq, double phase, double gate_t0 = 0.0);
    void add_constant(int channel, double value, double gate_t0 = 0.0);
    void add_state_feedback(int channel, int state_index, double coeff);

    int dim() const { return dim_; }
    bool has_state_feedback() const { return has_feedback_; }

    /// Pure evaluation; throws if a state-feedback term is present.
    Vector eval(double t) const;
    /// Evaluation with access to the live state (for feedback terms).
    Vector eval(double t, const Vector& state) const;

private:
    struct Term {
        enum Kind { Step, Sine, Constant, StateFeedback } kind;
        int channel = 0;
        double a = 0.0;      // amplitude / value / coefficient
        double omega = 0.0;  // angular frequency (sine)
        double phase = 0.0;  // phase (sine)
        double t0 = 0.0;     // gate time
        int state_index = 0; // feedback source
    };
    void check_channel(int channel) const;

    int dim_;
    bool has_feedback_ = false;
    std::vector<Term> terms_;
};

}  // namespace smobs
