#include "doctest.h"

#include "logalg/examples.hpp"

using namespace logalg;

namespace {

std::string value_of(const ExampleReport &r, std::string_view name)
{
    const Quantity *q = r.find(name);
    REQUIRE_MESSAGE(q != nullptr, "missing quantity ", std::string(name));
    return q->value;
}

} // namespace

TEST_CASE("L(E, 1) as a rational multiple of the real period")
{
    const ExampleReport r = example_one();
    CHECK_MESSAGE(r.ok(), r.first_failure().value_or(""));
    CHECK(r.exact_result == "Omega/5");
    CHECK(value_of(r, "2P recognized") == "(47/3, -121/2)");
    CHECK(value_of(r, "P recognized") == "no match");
    CHECK(value_of(r, "order of 2P") == "5");
    CHECK(value_of(r, "order of P") == "10");
    CHECK(value_of(r, "L(E,1)").substr(0, 12) == "0.2538418608");
    CHECK(value_of(r, "Omega").substr(0, 12) == "1.2692093042");
}

TEST_CASE("quadratic twist by the character of Q(sqrt(-3))")
{
    const ExampleReport r = example_two();
    CHECK_MESSAGE(r.ok(), r.first_failure().value_or(""));
    CHECK(r.exact_result == "(Omega - 2*Omega')/sqrt(-3)");
    CHECK(value_of(r, "order of Q - conj(Q)") == "2");
    CHECK(value_of(r, "multiple of (Omega - 2*Omega')/2") == "1");
    CHECK(value_of(r, "L(E,chi,1)").substr(0, 12) == "1.6844963329");
}

TEST_CASE("cubic twist mod 7")
{
    const ExampleReport r = example_three();
    CHECK_MESSAGE(r.ok(), r.first_failure().value_or(""));
    CHECK(r.exact_result == "(5/14)*(1 + sqrt(-3))*g(psi)*Omega");
    CHECK(value_of(r, "T/Omega") == "10");
    CHECK(value_of(r, "wp(T)") == "pole");
    CHECK(value_of(r, "2P1 + 2P2 - 4P3 - 4P4 + 2P5 + 2P6 = O") == "O");
    CHECK(value_of(r, "L(E,psi,1)").substr(0, 8) == "1.997106");
}

TEST_CASE("too few terms is reported, not hidden")
{
    ExampleOptions opt;
    opt.terms = 5;
    const ExampleReport r = example_one(opt);
    CHECK(!r.ok());
    CHECK(r.first_failure() == "L(E,1)");
    CHECK_THROWS_WITH_AS(run_example("four"), doctest::Contains("InvalidArgument"), Error);
}
