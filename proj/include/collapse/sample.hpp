#pragma once

#include <string>
#include <vector>

namespace collapse {

/// Provenance of a sample series: which computation path produced it.
enum class SampleSource { Explicit, Oracle, Approx, Parametric };

const char* to_string(SampleSource s);

/// One (t, r, rdot) triple. rdot may be -inf at the collapse point for
/// gamma <= -1; t and r are always finite.
struct Sample {
    double t;
    double r;
    double rdot;
};

/// Ordered samples (strictly increasing t) with provenance.
struct SampleSeries {
    SampleSource source = SampleSource::Explicit;
    std::vector<Sample> points;
};

}  // namespace collapse
