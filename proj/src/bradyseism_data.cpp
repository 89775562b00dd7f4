#include "bradyseism_data.hpp"

// Magnitudes of the 1983-1984 Campi Flegrei sequence, filtered to >= 1.0,
// one group per lunar month (labels I..XIII) in catalogue order.

namespace ppbench::detail {

namespace {

constexpr double kMonthI[] = {
    1.3, 1.5, 1.1, 1.2, 2.3, 1.4, 1.2, 1.2, 1.4, 1.4, 1.4, 1.0, 1.4, 1.0, 1.2, 1.2, 1.4, 1.6,
    1.7, 1.3, 1.5, 1.5, 1.7, 1.3, 1.5, 1.4, 1.4, 1.0, 1.5, 1.3, 2.4, 1.6, 1.8, 1.4, 1.9, 2.1,
    1.3, 1.8, 1.7, 1.4, 1.0, 1.9, 1.5, 1.5, 1.4, 1.4
};
constexpr double kMonthII[] = {
    1.4, 2.0, 2.2, 1.0, 1.8, 2.4, 1.1, 2.3, 1.5, 1.0, 1.2, 1.3, 1.2, 2.1, 1.2, 1.3, 1.4, 1.6,
    1.5, 1.6, 1.7, 2.8, 1.7, 1.5, 1.8, 1.2, 1.4, 1.0, 1.8, 1.4, 1.6, 1.6, 1.0, 1.4, 1.2, 1.2,
    1.2, 1.2, 2.0, 1.9, 1.6, 1.5, 1.3, 1.6, 1.4, 2.5, 2.4, 1.6, 2.0, 1.4, 1.8, 1.3, 1.3, 1.2,
    1.8, 1.2, 1.2, 1.2, 1.2, 1.2, 2.2, 1.0, 1.4, 1.4, 2.4, 1.4, 3.6, 1.8, 1.3, 1.6, 2.0, 1.4,
    1.0, 1.4, 2.6, 1.2
};
constexpr double kMonthIII[] = {
    2.0, 1.6, 1.4, 1.0, 1.4, 1.3, 1.5, 1.7, 1.2, 1.0, 1.4, 1.0, 1.1, 1.4, 1.0, 1.4, 1.2, 1.0,
    1.3, 1.6, 1.2, 1.6, 1.2, 1.2, 1.2, 2.0, 1.0, 1.2, 1.2, 1.5, 1.0, 1.8, 1.1, 1.2, 1.4, 1.6,
    1.8, 1.2, 1.9, 1.4, 1.2, 1.4, 1.4, 2.2, 1.2, 2.6, 1.0, 1.5, 1.2, 1.8, 2.7, 1.8, 1.2, 1.0,
    1.5, 1.2, 1.4, 1.4, 1.4, 1.5, 1.0, 1.6, 1.5, 1.2, 1.5, 1.4, 1.7, 1.2, 1.5, 1.2, 1.7, 1.2,
    1.2, 1.3, 1.4, 1.3, 2.3, 1.7, 1.8, 1.2, 1.4, 1.3, 1.4, 2.0, 1.3, 1.6, 1.6, 1.4, 1.2, 1.6,
    1.3, 1.4, 1.0, 1.2, 1.0, 1.1, 1.1, 1.8, 1.5, 1.2, 1.9, 1.0, 1.7, 1.2, 1.0, 1.2, 1.0, 1.3,
    1.2, 1.5, 2.3, 1.0, 1.2, 1.4, 1.3, 1.0, 1.2, 1.4, 1.0, 1.4, 1.2, 1.0, 1.0, 1.8, 1.5, 1.5,
    1.1, 1.6, 1.1, 1.0, 1.9, 1.0, 1.2, 1.5, 1.2, 1.1, 1.2, 1.1, 1.9, 1.3, 1.2, 1.9, 1.5, 1.0,
    1.0, 1.3, 1.4, 1.0, 1.2, 1.4, 1.5, 1.2, 1.1, 1.7, 1.1, 1.4, 1.2, 1.2, 1.9, 1.5, 1.0, 1.2,
    1.2, 1.7, 1.0, 1.6, 1.0, 1.3, 1.4, 2.0, 1.7, 2.3, 1.3, 2.9, 1.7, 1.8, 1.6, 1.7, 1.6, 1.2,
    1.6, 1.6, 1.0, 1.6, 2.0, 1.0, 1.7, 1.0, 1.5, 1.4, 1.8, 1.0, 1.3, 1.5, 1.6, 1.5, 1.4, 1.7,
    1.5, 1.6, 1.3, 1.0, 1.0, 1.3, 1.5, 1.4, 1.4, 1.3, 1.0, 1.6, 1.7, 1.6, 1.2, 1.2, 1.2, 1.3,
    1.9, 2.1, 1.2, 1.3, 1.3, 1.3, 2.2, 1.5, 1.3, 1.3, 1.9, 1.0, 1.4, 1.2, 4.0, 1.2, 1.3, 1.3,
    1.6, 1.3, 1.0, 3.0
};
constexpr double kMonthIV[] = {
    1.5, 1.2, 1.9, 1.4, 2.2, 1.0, 1.5, 1.6, 1.3, 1.3, 1.3, 1.0, 1.2, 2.0, 1.0, 1.2, 1.0, 2.3,
    1.9, 1.3, 1.5, 1.5, 1.6, 1.3, 2.0, 1.0, 1.5, 1.0, 2.3, 1.2, 1.5, 1.7, 1.8, 1.2, 2.0, 1.0,
    1.4, 1.3, 1.3, 1.4, 1.1, 1.4, 1.6, 1.0, 3.0, 2.1, 2.6, 2.3, 1.2, 2.3, 1.0, 2.3, 1.9, 1.6,
    2.6, 2.6, 1.0, 2.2, 1.4, 1.2, 1.0, 1.4, 2.2, 1.3, 1.7, 1.9, 1.9, 2.3, 1.4, 1.6, 1.7, 1.2,
    1.2, 1.5, 1.0, 1.6, 2.1, 2.2, 1.0, 1.6, 1.5, 1.7, 1.7, 1.4, 1.6, 1.6, 1.0, 2.3, 1.3, 1.6,
    1.2, 1.7, 1.2, 1.7, 1.2, 1.8, 1.0, 1.3, 1.2, 1.0, 2.6
};
constexpr double kMonthV[] = {
    1.4, 1.3, 2.0, 1.1, 1.2, 1.7, 1.9, 1.7, 1.5, 1.8, 1.6, 1.1, 1.1, 1.1, 1.1, 1.6, 1.4, 1.2,
    1.2, 1.3, 1.7, 1.8, 1.4, 2.2, 1.6, 1.6, 1.2, 1.4, 1.8, 1.3, 1.5, 1.7, 2.8, 1.6, 1.4, 1.5,
    1.4, 3.3, 1.4, 1.3, 1.4, 1.2, 1.6, 1.1, 1.0, 1.7, 1.5, 1.2, 1.2, 1.3, 2.4, 1.4, 1.0, 1.3,
    1.3, 1.2, 1.6, 1.0, 1.2, 3.5, 1.0, 1.4, 1.6, 1.4, 1.2, 1.9, 1.9, 1.0, 1.1, 1.0, 1.6, 1.3,
    1.7, 2.4, 1.4, 2.3, 1.0, 1.4, 1.0, 1.0
};
constexpr double kMonthVI[] = {
    1.0, 1.9, 1.0, 1.1, 1.0, 1.1, 1.5, 1.5, 1.7, 1.3, 1.1, 1.1, 1.2, 1.4, 1.5, 1.0, 1.2, 2.1,
    1.3, 1.2, 2.0, 1.9, 1.2, 1.7, 1.8, 1.8, 1.2, 1.5, 1.3, 1.1, 1.1, 1.5, 1.9, 1.2, 2.2, 1.4,
    1.4, 1.5, 1.8, 1.4, 1.1, 2.1, 1.3, 1.3, 1.1, 1.0, 1.1, 1.2, 1.0, 1.0, 2.4, 2.1, 2.5, 2.7,
    1.2, 1.3, 1.4, 3.1, 1.2, 2.3, 1.6, 1.6, 1.2, 1.2, 1.6, 1.0, 1.5, 3.8, 1.2, 1.9, 1.5, 1.1,
    1.3, 1.3, 1.0, 1.3, 2.5, 3.0, 1.0, 1.2, 1.7, 2.5, 1.3, 1.1, 1.3, 1.0, 1.1, 1.0, 1.3, 1.2,
    1.6, 1.0, 1.0, 1.5, 1.0, 1.3, 1.2, 1.1, 1.4, 1.3, 1.6, 1.9, 2.2, 2.7, 3.8, 1.7, 1.6, 2.3,
    1.1, 1.1, 1.2, 1.3, 2.3, 2.0, 1.6, 1.3, 2.0, 1.3, 1.5, 1.2, 1.6, 1.0, 1.2, 2.5, 1.0, 1.3,
    1.1, 1.3, 1.3, 1.1
};
constexpr double kMonthVII[] = {
    1.1, 1.5, 1.2, 1.7, 2.5, 1.5, 1.7, 1.5, 1.3, 2.1, 1.9, 1.1, 1.0, 1.9, 1.6, 1.3, 1.3, 1.0,
    1.0, 1.1, 1.3, 1.9, 1.3, 1.7, 1.2, 1.1, 2.3, 1.3, 1.3, 1.1, 2.0, 1.4, 1.3, 1.1, 1.1, 1.6,
    1.1, 1.1, 1.1, 1.2, 1.8, 1.1, 1.3, 1.3, 1.2, 2.6, 1.6, 1.0, 1.3, 2.4, 1.0, 1.0, 1.4, 1.5,
    1.8, 1.6, 1.4, 1.8, 1.2, 3.3, 1.2, 1.2, 1.1, 1.7, 2.0, 1.3, 1.5, 1.4, 1.6, 1.7, 1.3, 1.1,
    1.1, 1.8, 1.0, 1.4, 1.2, 1.1, 1.2, 1.0, 1.1, 1.1, 1.0, 1.2, 1.4, 1.3, 1.5, 1.7, 2.8, 2.6,
    1.6, 1.3, 1.4, 1.0, 1.3, 1.6, 1.3, 1.8, 1.3, 1.7, 1.9, 1.0, 1.5, 1.3, 1.2, 1.3, 1.2, 1.8,
    1.2, 2.1, 1.9, 1.4, 1.5, 1.7, 2.6, 1.1, 1.3, 1.4, 1.8, 2.1, 1.3, 1.3, 1.1, 1.4, 1.5, 1.5,
    1.4, 3.4, 1.9, 1.4, 1.8, 1.3, 2.1, 1.6, 2.2, 1.9, 1.2, 2.3, 1.7, 1.6, 1.6, 1.2, 1.2, 1.6,
    1.7, 1.3, 2.6, 1.7, 1.0, 1.9, 1.3, 1.4, 1.1, 1.3, 1.7, 1.3, 1.9, 1.1, 1.0, 2.5, 1.7, 1.6,
    1.2, 1.7, 1.7, 1.7, 1.2, 1.5, 1.6, 1.8, 1.0, 1.3, 2.3, 1.3, 1.7, 1.6, 1.3, 2.1, 1.2, 1.7,
    1.8, 3.6, 1.9, 1.4, 1.2, 1.3, 1.2
};
constexpr double kMonthVIII[] = {
    1.1, 1.4, 1.8, 1.3, 1.0, 1.6, 1.6, 1.5, 1.4, 1.9, 1.7, 1.5, 1.0, 1.1, 1.4, 1.4, 1.0, 1.2,
    1.1, 1.1, 1.5, 1.3, 1.7, 1.3, 2.1, 1.4, 1.3, 1.7, 1.3, 1.4, 1.0, 1.3, 1.6, 1.0, 2.4, 1.3,
    1.4, 1.3, 1.3, 1.3, 1.2, 1.3, 1.1, 1.3, 1.0, 1.2, 1.3, 1.3, 1.5, 1.9, 1.3, 1.2, 1.8, 1.6,
    1.5, 1.2, 1.3, 1.2, 1.5, 1.3, 1.1, 1.3, 2.1, 1.3, 3.2, 1.9, 1.2, 2.1, 1.6, 1.6, 1.8, 1.8,
    2.7, 2.5, 2.1, 1.7, 2.3, 2.1, 1.9, 2.1, 1.8, 1.0, 1.1, 1.9, 1.3, 1.7, 1.6, 1.7, 2.0, 2.3,
    1.6, 1.2, 1.0, 1.3, 1.6, 1.9, 1.9, 1.3, 1.8, 1.2, 1.7, 1.1, 1.0, 1.9, 1.3, 1.5, 1.5, 1.3,
    1.3, 1.2, 1.9, 1.1, 1.9, 1.7, 1.6, 1.7, 1.2, 1.7, 1.8, 1.4, 1.6, 1.4, 2.4, 1.9, 1.6, 1.7,
    1.4, 1.3, 2.8, 1.6, 1.5, 1.7, 1.3, 1.2, 1.2, 1.2, 2.0, 1.7, 3.7, 1.3, 1.5, 1.7, 1.0, 1.1,
    1.2, 1.1, 1.1, 1.3, 1.5, 1.3, 2.2, 1.9, 1.3, 1.2, 1.5, 1.3, 1.4, 1.6, 2.1, 1.7, 1.0, 1.3,
    1.3, 1.0, 3.0, 3.2, 1.0, 1.0, 1.0, 1.0, 1.2, 1.1, 1.2, 1.2, 1.4, 1.3, 2.3, 1.7, 2.0, 1.3,
    2.1, 1.1, 1.2, 1.7, 1.6, 1.3, 1.1, 1.7, 2.1, 1.3, 1.7, 1.8, 2.2, 1.0, 2.0, 1.2, 1.2, 1.0,
    1.7, 1.2, 1.2, 1.0, 1.5, 1.3, 1.1, 1.3
};
constexpr double kMonthIX[] = {
    1.8, 2.5, 1.4, 1.0, 1.3, 1.2, 1.3, 1.7, 1.5, 1.0, 1.2, 1.5, 2.5, 1.2, 1.2, 1.2, 2.5, 1.7,
    1.8, 1.4, 1.2, 1.5, 1.2, 2.2, 2.1, 1.6, 2.3, 1.4, 1.1, 1.1, 1.3, 1.7, 1.5, 1.6, 1.0, 1.2,
    1.0, 1.3, 1.8, 1.5, 1.7, 1.3, 1.8, 1.5, 1.4, 2.2, 1.3, 1.5, 1.1, 2.1, 1.0, 3.9, 1.4, 1.3,
    1.4, 1.1, 1.0, 1.1, 1.2, 1.0, 1.8, 1.0, 2.0, 1.0, 1.0, 1.4, 1.0, 1.7, 1.3, 1.2, 1.2, 1.8,
    1.0, 2.5, 1.2, 1.5, 1.4, 1.7, 1.2, 2.8, 1.9, 1.6, 2.5, 1.0, 1.8, 2.0, 1.6, 1.0, 1.5, 1.3,
    1.3, 2.5, 1.3, 1.9, 1.8, 1.7, 2.1, 4.0, 1.1, 1.3, 1.5, 2.1, 1.0, 1.1, 1.0, 2.4, 2.0, 1.4,
    1.6, 1.1, 1.3, 1.2, 1.3, 1.2, 1.3, 3.6, 2.5, 2.2, 1.3, 1.1, 2.1, 1.1, 1.4, 1.3, 1.2, 1.7,
    1.0, 1.7, 1.1, 1.3, 1.3, 1.5, 1.4, 2.4, 1.4, 1.0, 1.3, 1.7, 1.2, 2.5, 3.0, 2.4, 1.6, 1.7,
    2.1, 1.0, 1.5, 1.5, 1.0, 1.4, 1.3, 1.9, 1.1, 1.0, 2.3, 1.0, 1.1, 1.2, 1.3, 1.4, 2.0, 1.4,
    1.3, 1.6, 1.2, 1.3, 1.1, 1.7, 1.5, 2.2, 1.3, 1.7, 1.0, 1.3, 1.3, 1.3, 2.1, 1.6, 1.2
};
constexpr double kMonthX[] = {
    1.0, 1.7, 1.0, 1.4, 1.6, 1.3, 1.8, 1.9, 1.3, 1.8, 1.4, 1.0, 1.5, 1.9, 1.4, 1.9, 2.3, 1.5,
    1.3, 1.4, 1.9, 1.5, 1.5, 1.6, 2.0, 2.0, 1.4, 2.2, 1.4, 1.8, 1.6, 1.4, 2.0, 1.0, 1.7, 1.8,
    2.7, 1.3, 2.5, 1.6, 3.0, 1.4, 1.4, 1.8, 1.8, 1.7, 1.2, 1.7, 1.8, 3.0, 1.1, 1.9, 1.0, 1.8,
    2.5, 2.5, 1.4, 1.3, 1.3, 1.9, 1.4, 1.5, 1.5, 1.7, 1.4, 2.5, 2.0, 1.1, 1.5, 1.8, 1.2, 2.2,
    1.6, 1.6, 1.3, 1.1, 1.1, 1.1, 1.0, 2.1, 1.9, 1.8, 1.3, 1.8, 1.5, 1.5, 1.4, 1.4, 1.5, 1.0,
    1.5, 1.2, 1.9, 1.0, 1.7, 1.1, 1.7, 1.2, 1.1, 1.2, 1.0, 1.4, 1.8, 1.8, 1.0, 1.1, 1.6, 1.4,
    1.0, 1.0, 1.0, 1.0, 1.4, 1.5, 1.3, 1.3, 1.5, 1.7, 1.2, 3.5, 1.3, 1.4, 1.3, 1.3, 2.0, 1.7,
    1.4, 1.2, 1.3, 1.3, 2.0, 2.0, 1.2, 1.3, 1.7, 1.3, 2.6, 2.0, 1.2, 1.5, 1.3, 1.4, 1.5, 1.0,
    1.1, 1.9, 1.6, 1.9, 1.9, 1.0, 1.7, 1.0, 1.3, 1.5, 2.6, 1.9, 1.4, 1.9, 1.0, 1.0, 1.0, 1.0,
    1.1, 1.0, 2.0, 1.4, 1.0, 1.9, 1.0, 1.4, 1.1, 1.0, 1.4, 1.4, 1.0, 1.9, 1.8, 1.3, 1.0, 1.3,
    2.8, 1.2, 1.0, 1.5, 1.3, 2.5, 1.6, 1.3, 3.5, 1.4, 1.4, 1.4, 1.0, 1.1, 1.5, 1.2, 1.2, 1.6,
    1.7, 1.4, 3.1, 2.4, 3.2, 1.2, 1.7, 1.2, 2.1, 2.2, 1.0, 1.4, 1.3
};
constexpr double kMonthXI[] = {
    1.7, 1.4, 1.0, 1.4, 1.5, 1.9, 1.2, 1.4, 1.0, 1.8, 1.7, 1.0, 1.3, 1.9, 1.0, 1.5, 1.3, 1.6,
    1.9, 1.0, 3.4, 1.2, 1.0, 2.5, 1.7, 1.8, 1.4, 3.4, 1.3, 1.4, 1.1, 1.1, 1.0, 1.3, 1.0, 1.3,
    1.3, 1.3, 1.0, 1.5, 1.7, 1.7, 1.4, 1.3, 1.5, 1.1, 1.3, 3.2, 1.2, 1.7, 1.6, 1.7, 1.4, 1.3,
    1.0, 1.4, 1.7, 1.3, 1.0, 2.2, 1.1, 1.5, 1.6, 2.0, 1.4, 1.2, 1.1, 1.3, 1.5, 1.7, 1.4, 1.0,
    1.7, 1.4, 1.8, 1.8, 1.5, 1.5, 1.6, 1.5, 1.6, 1.6, 1.3, 1.0, 1.2, 1.2, 1.3, 1.5, 1.7, 1.8,
    1.8
};
constexpr double kMonthXII[] = {
    1.5, 3.2, 1.5, 1.3, 3.3, 1.8, 3.0, 1.5, 1.3, 1.8, 1.8, 1.5, 3.0, 1.2, 1.3, 1.2, 1.5, 2.0,
    2.1, 1.8, 1.2, 1.8, 1.2, 1.5, 1.3, 1.3, 1.5, 1.7, 1.6, 2.0, 1.3, 1.6, 1.0, 1.4, 1.8, 1.2,
    1.8, 1.5, 1.2, 1.5, 1.9, 1.1, 1.5, 1.2, 1.3, 1.3, 1.0, 1.3, 2.4, 2.4, 2.9, 1.4, 1.4, 1.3,
    1.5, 1.0, 1.0, 1.1, 1.2, 1.4, 1.6, 1.1, 1.0, 1.0, 1.2, 1.2, 1.0, 1.5, 1.2, 1.5, 1.1, 1.2,
    1.0, 1.0, 2.6, 3.3, 1.2, 1.6, 1.3, 1.0, 1.2, 1.3, 1.1, 1.7, 1.0, 3.6, 1.8
};
constexpr double kMonthXIII[] = {
    1.0, 1.5, 1.3, 1.4, 1.3, 1.3, 1.1, 1.5, 1.5, 1.5, 1.0, 1.3, 1.5, 3.6, 2.2, 1.0, 1.5, 1.4,
    1.9, 3.5, 1.6, 1.2, 1.8, 1.2, 1.6, 1.7, 1.4, 1.6, 1.5, 1.8, 1.6, 1.4, 1.2, 1.5, 2.4, 1.6,
    1.0, 1.3, 1.3, 1.2, 1.2, 1.2, 1.0, 1.0, 1.0, 1.3, 1.5, 1.3, 1.0, 1.3, 1.8, 1.5, 1.0, 1.2,
    1.6, 1.0, 1.0, 3.5, 1.0, 1.3, 1.3, 2.0, 1.2, 1.4, 1.4, 1.2, 1.0, 1.8, 1.3, 1.5, 1.0, 1.4,
    1.4, 1.2, 1.2, 1.2, 2.0, 2.3, 1.7, 1.2, 1.0, 1.0, 1.2, 1.4, 1.8, 1.0, 2.4, 1.7, 1.3, 2.2,
    1.1, 1.3, 1.0, 1.4, 1.1, 1.0, 2.0, 1.6, 2.5, 1.4, 1.0, 1.0, 1.1, 1.2, 1.5, 1.3, 1.2, 1.2,
    1.8, 1.3, 1.1
};

}  // namespace

const std::array<RawMonth, 13>& raw_months() {
  static const std::array<RawMonth, 13> months{{
      {"I", "July 1983", kMonthI, 46, 674, 0xc405d9cfd1f321ffULL},
      {"II", "August 1983", kMonthII, 76, 1201, 0x7f9d2912ae94c5e6ULL},
      {"III", "September 1983", kMonthIII, 238, 3373, 0xc2049991dd44d7f6ULL},
      {"IV", "October 1983", kMonthIV, 101, 1584, 0x3a5bbc2b6476dc33ULL},
      {"V", "November 1983", kMonthV, 80, 1199, 0x088f071e95058734ULL},
      {"VI", "December 1983", kMonthVI, 130, 1963, 0xc513754e2ef2bdbeULL},
      {"VII", "January 1984", kMonthVII, 187, 2845, 0x22eefb0e71b7d622ULL},
      {"VIII", "February 1984", kMonthVIII, 206, 3130, 0x05657d83e6684405ULL},
      {"IX", "March 1984", kMonthIX, 179, 2764, 0x2d22f85a0f43b581ULL},
      {"X", "April 1984", kMonthX, 211, 3280, 0xcf015deff4a258abULL},
      {"XI", "May 1984", kMonthXI, 91, 1358, 0x5b2fa3a316c86915ULL},
      {"XII", "June 1984", kMonthXII, 87, 1359, 0xa3ebe4b50fb0a220ULL},
      {"XIII", "July 1984", kMonthXIII, 111, 1607, 0xe70259aaf9f81264ULL},
  }};
  return months;
}

}  // namespace ppbench::detail
