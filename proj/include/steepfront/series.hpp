#ifndef STEEPFRONT_SERIES_HPP
#define STEEPFRONT_SERIES_HPP

#include <cstddef>
#include <vector>

namespace steepfront {

/// A sampled time series (t_k, y_k), t strictly increasing.
struct Series {
    std::vector<double> t;
    std::vector<double> y;

    void push(double time, double value) {
        t.push_back(time);
        y.push_back(value);
    }
    std::size_t size() const { return t.size(); }
    bool empty() const { return t.empty(); }
};

} // namespace steepfront

#endif
