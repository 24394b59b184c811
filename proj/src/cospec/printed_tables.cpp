#include <array>

#include "qgraph/printed_tables.hpp"

namespace qgraph {

namespace {

// Verbatim, including obvious typos; corrections are derived, never edited in.
constexpr std::array kPrinted = std::to_array<PrintedPolynomial>({
    {4, 1, 1, "-8z^3+4z"},
    {4, 1, 2, "-12z^3+7z+2"},

    {5, 1, 1, "16z^4-12z^2+1"},
    {5, 1, 2, "24z^4-20z^2"},
    {5, 1, 3, "24z^4-18z^2-4z+1"},
    {5, 1, 4, "24z^4-24z^2-8z"},
    {5, 2, 1, "-12z^3+5z"},
    {5, 2, 2, "-12z^3+4z"},
    {5, 2, 3, "-16z^3+8z+2"},
    {5, 2, 4, "-18z^3+8z+2"},
    {5, 3, 1, "8z^2-1"},
    {5, 3, 2, "9z^2-1"},

    {6, 1, 1, "-32z^5+32z^3-6z"},
    {6, 1, 2, "-48z^5+52z^2-11z+2"},
    {6, 1, 3, "-48z^5+48z^3-4z"},
    {6, 1, 4, "-48z^5+48z^3+8z^2-9z-2"},
    {6, 1, 5, "-48z^5+60z^3+8z^2-9z"},
    {6, 1, 6, "-64z^5+64z^3+16z^2-12z-4"},
    {6, 2, 1, "24z^4-16z^2+1"},
    {6, 2, 2, "24z^5-14z^2+1"},
    {6, 2, 3, "24z^4-12z^2"},
    {6, 2, 4, "32z^4-24z^2"},
    {6, 2, 5, "36z^4-25z^2"},
    {6, 2, 6, "36z^4-24z^2"},
    {6, 2, 7, "36z^4-22z^2-4z+1"},
    {6, 2, 8, "36z^5-25z^2-6z+1"},
    {6, 2, 9, "32z^4-20z^2-4z+1"},
    {6, 2, 10, "48z^--32z^2-8z"},
    {6, 2, 11, "54z^4-36z^2-10z"},
    {6, 2, 12, "81z^4-54z^2-24z-3"},
    {6, 3, 1, "-16z^3+6z"},
    {6, 3, 2, "-16z^3+4z"},
    {6, 3, 3, "-18z^3+5z"},
    {6, 3, 4, "-18z^3+6z"},
    {6, 3, 6, "-20z^3+9z+2"},
    {6, 3, 7, "-24z^3+9z+2"},
    {6, 3, 8, "-27z^3+9z+2"},
    {6, 4, 1, "10z^2-1"},
    {6, 4, 2, "12z^2-1"},

    {7, 1, 1, "64z^6-80z^4+24z^2-1"},
    {7, 1, 2, "96z^6-120z^4-16z^3+36z^2+8z-1"},
    {7, 1, 3, "96z^6-120z^4+28z^2"},
    {7, 1, 4, "96z^6-112z^4+30z^2-2"},
    {7, 1, 5, "96z^6-120z^4+34z^2-4z-1"},
    {7, 1, 6, "144z^6-168z^4+48z^2-4"},
    {7, 1, 7, "144z^6-168z^4+49z^2-4"},
    {7, 1, 8, "128z^6-160z^4-16z^3+40z^2+8z"},
    {7, 2, 1, "-48z^5+44z^3-7z"},
    {7, 2, 2, "-48z^5+40z^3-6z"},
    {7, 2, 3, "-48z^5+40z^3-7z"},
    {7, 2, 4, "-48z^5+36z^3-4z"},
    {7, 2, 5, "-64z^5+56z^3+8z^2-10z-2"},
    {7, 2, 6, "-64z^5+48z^3+8z^2-4z"},
    {7, 2, 7, "-72z^5+66z^3+12z^2-10z-2"},
    {7, 2, 8, "-72z^5+62z^3+12z^2-9z-2"},
    {7, 2, 9, "-72z^5+62z^3+8z^2-10z-2"},
    {7, 2, 10, "-72z^5+56z^3+8z^2-6z"},
    {7, 2, 11, "-64z^5+56z^3-4z"},
    {7, 2, 12, "-72z^5+68z^3-4z"},
    {7, 2, 13, "-72z^5+60z^3-4z"},
    {7, 2, 14, "-72z^5+60z^3-5z"},
    {7, 2, 15, "-64z^5+64z^3-12z+2"},
    {7, 2, 16, "-72z^5+66z^3-12z+2"},
    {7, 2, 17, "-72z^5+68z^3-12z+2"},
    {7, 2, 18, "-108z^5+90z^3+2z^2-8z-2"},
    {7, 2, 19, "-98z^5+76z^3+16z^2-4z"},
    {7, 2, 20, "-96z^5+84z^3+20z^2-13z-4"},
    {7, 2, 21, "-80z^5+72z^3+16z^2-13z-4"},
    {7, 2, 22, "-108z^5+994z^3+8z^2-10z"},
    {7, 2, 23, "-96z^5+88z^3+8z^2-11z"},
    {7, 2, 24, "-108z^5+96z^3+12z^2-11z"},
    {7, 2, 25, "-98z^5+176z^3+16z^2-4z"},
    {7, 2, 26, "-128z^5+104z^3+24z^2"},
    {7, 2, 27, "-16z2^5+144z^3+24z^2-6z"},
    {7, 3, 1, "32z^4-20z^2+1"},
    {7, 3, 2, "36z^4-19z^2+1"},
    {7, 3, 3, "36z^4-18z^2+1"},
    {7, 3, 4, "36z^4-21z^2+1"},
    {7, 3, 5, "36z^4-16z^2+1"},
    {7, 3, 6, "36z^4-12z^2"},
    {7, 3, 7, "36z^4-16z^2"},
    {7, 3, 8, "36z^4-12z^2+1"},
    {7, 3, 9, "40z^4-22z^2-4z+1"},
    {7, 3, 10, "48z^4-26z^2-4z+1"},
    {7, 3, 11, "54z^4-27z^2-4z+1"},
    {7, 3, 12, "48z^4-24z^2-4z+1"},
    {7, 3, 13, "48z^4-30z^2"},
    {7, 3, 14, "48z^4-28z^2"},
    {7, 3, 15, "54z^4-30z^2"},
    {7, 3, 16, "40z^4-28z^2"},
    {7, 3, 17, "72z^4-41z^2-10z"},
    {7, 3, 18, "64z^4-36z^2-8z"},
    {7, 3, 19, "81z^4-76z^2-12z"},
    {7, 3, 20, "108z^4-63z^2-26z-3"},
    {7, 3, 21, "48z^--32z^2-8z+1"},
    {7, 4, 1, "-20z^3+7z"},
    {7, 4, 2, "-24z^3+6z"},
    {7, 4, 3, "-24z^3+7z"},
    {7, 4, 4, "-27z^3+6z"},
    {7, 4, 5, "-24z^3+5"},
    {7, 4, 6, "-20z^3+4z"},
    {7, 4, 7, "-24z^3+10z+2"},
    {7, 4, 8, "-32z^3+10z+2"},
    {7, 4, 9, "-36z^3+10z+2"},
    {7, 4, 10, "-30z^3+10z+2"},
    {7, 5, 1, "16z^2-1"},
    {7, 5, 2, "12z^2-1"},
    {7, 5, 3, "15z^2-1"},
    {7, 6, 1, "-7z"},
});

constexpr std::array kStated = std::to_array<StatedCount>({
    {4, 1, 2},
    {5, 1, 4},
    {5, 2, 4},
    {5, 3, 2},
    {6, std::nullopt, 29},
    {6, 1, 6},
    {6, 2, 12},
    {6, 3, 7},
    {6, 4, 2},
    {7, 0, 1},
    {7, 1, 8},
    {7, 2, 27},
    {7, 3, 21},
    {7, 4, 10},
    {7, 5, 3},
});

}  // namespace

std::span<const PrintedPolynomial> printed_polynomials() { return kPrinted; }

std::span<const StatedCount> stated_counts() { return kStated; }

}  // namespace qgraph
