#pragma once

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

// Minimal check harness: each test file defines TESTS with TEST(name) and
// returns the failure count from main via RUN_ALL().

namespace testsup {

struct Registry {
    struct Case {
        std::string name;
        std::function<void()> fn;
    };
    std::vector<Case> cases;
    int failures = 0;
    int checks = 0;
    std::string current;

    static Registry& get() {
        static Registry r;
        return r;
    }

    void fail(const std::string& file, int line, const std::string& what) {
        ++failures;
        std::cout << "    FAIL " << current << " at " << file << ":" << line << ": " << what << "\n";
    }

    int run_all() {
        for (auto& c : cases) {
            current = c.name;
            int before = failures;
            try {
                c.fn();
            } catch (const std::exception& e) {
                fail(__FILE__, __LINE__, std::string("unexpected exception: ") + e.what());
            }
            std::cout << (failures == before ? "ok   " : "FAIL ") << c.name << "\n";
        }
        std::cout << checks << " checks, " << failures << " failures\n";
        return failures == 0 ? 0 : 1;
    }
};

struct Registrar {
    Registrar(const std::string& name, std::function<void()> fn) {
        Registry::get().cases.push_back({name, std::move(fn)});
    }
};

} // namespace testsup

#define TEST(name)                                                        \
    static void test_fn_##name();                                         \
    static testsup::Registrar reg_##name(#name, test_fn_##name);          \
    static void test_fn_##name()

#define CHECK(cond)                                                       \
    do {                                                                  \
        ++testsup::Registry::get().checks;                                \
        if (!(cond)) testsup::Registry::get().fail(__FILE__, __LINE__, #cond); \
    } while (0)

#define CHECK_MSG(cond, msg)                                              \
    do {                                                                  \
        ++testsup::Registry::get().checks;                                \
        if (!(cond)) {                                                    \
            std::ostringstream os_;                                       \
            os_ << #cond << "  [" << msg << "]";                          \
            testsup::Registry::get().fail(__FILE__, __LINE__, os_.str()); \
        }                                                                 \
    } while (0)

#define CHECK_THROWS(expr, ex_type)                                       \
    do {                                                                  \
        ++testsup::Registry::get().checks;                                \
        bool caught_ = false;                                             \
        try {                                                             \
            (void)(expr);                                                 \
        } catch (const ex_type&) {                                        \
            caught_ = true;                                               \
        } catch (...) {}                                                  \
        if (!caught_)                                                     \
            testsup::Registry::get().fail(__FILE__, __LINE__, #expr " did not throw " #ex_type); \
    } while (0)

#define RUN_ALL()                                                         \
    int main() { return testsup::Registry::get().run_all(); }
