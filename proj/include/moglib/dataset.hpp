#ifndef MOGLIB_DATASET_HPP
#define MOGLIB_DATASET_HPP

#include <string>
#include <vector>

#include "moglib/begled.hpp"

namespace moglib {

struct Dataset {
    std::string name;
    std::vector<BivariatePoint> pairs;
    std::string source;

    std::vector<double> column(int k) const;  // k in {1,2}
};

// Parses "x1,x2" CSV (LF or CRLF, '.' decimal point). Throws
// std::runtime_error naming the offending line on malformed input.
Dataset load_csv(const std::string& path);

// UEFA Champions League first-goal times, 37 matches over two seasons.
// x1: minute of the first kick goal by either team; x2: minute of the
// home team's first goal of any type.
Dataset uefa_dataset();

}  // namespace moglib

#endif
