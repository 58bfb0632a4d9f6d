#include "monopath/game_adapters.hpp"

namespace monopath {

namespace {

class PainterCoordinator : public LatticeCoordinator {
public:
    PainterCoordinator(OnlinePainter& p, int q, int n) : painter_(p), shadow_(2, q, n) {}

    void begin_stage(const LatticeBoard&) override {
        shadow_.begin_stage();
        painter_.begin_stage(shadow_);
    }

    int answer(const LatticeBoard&, std::size_t j) override {
        const Vertex prefix[1] = {static_cast<Vertex>(j)};
        const Color c = painter_.paint(shadow_, prefix);
        shadow_.draw(prefix, c);
        return c;
    }

    GridPoint choose(const LatticeBoard&) override { return shadow_.lengths_at(shadow_.stage()); }

private:
    OnlinePainter& painter_;
    OnlineBoard shadow_;
};

class CoordinatorPainter : public OnlinePainter {
public:
    CoordinatorPainter(LatticeCoordinator& c, int q, int n) : coord_(c), shadow_(q, n) {}

    void begin_stage(const OnlineBoard&) override {
        if (open_) {
            shadow_.close_stage(coord_.choose(shadow_));
        }
        coord_.begin_stage(shadow_);
        open_ = true;
    }

    Color paint(const OnlineBoard&, std::span<const Vertex> prefix) override {
        const std::size_t j = prefix[0];
        const int k = coord_.answer(shadow_, j);
        shadow_.apply_step(j, k);
        return static_cast<Color>(k);
    }

private:
    LatticeCoordinator& coord_;
    LatticeBoard shadow_;
    bool open_ = false;
};

class LatticeDrivenBuilder : public OnlineBuilder {
public:
    LatticeDrivenBuilder(LatticeBuilder& b, int q, int n) : builder_(b), shadow_(q, n) {}

    void begin_stage(const OnlineBoard& b) override {
        if (b.stage() > 1) {
            shadow_.close_stage(b.lengths_at(b.stage() - 1));
        }
        synced_ = 0;
        builder_.begin_stage(shadow_);
    }

    std::optional<std::vector<Vertex>> next_edge(const OnlineBoard& b) override {
        sync(b);
        if (shadow_.points().empty() || shadow_.forced_win()) {
            return std::nullopt;
        }
        const auto j = builder_.pick(shadow_);
        if (!j) {
            return std::nullopt;
        }
        return std::vector<Vertex>{static_cast<Vertex>(*j)};
    }

private:
    // feed the painter's colors back as coordinates
    void sync(const OnlineBoard& b) {
        const auto& st = b.stages().back();
        for (; synced_ < st.size(); ++synced_) {
            shadow_.apply_step(st[synced_].prefix[0], st[synced_].color);
        }
    }

    LatticeBuilder& builder_;
    LatticeBoard shadow_;
    std::size_t synced_ = 0;
};

class OnlineDrivenBuilder : public LatticeBuilder {
public:
    OnlineDrivenBuilder(OnlineBuilder& b, int q, int n) : builder_(b), shadow_(2, q, n) {}

    void begin_stage(const LatticeBoard&) override {
        shadow_.begin_stage();
        synced_ = 0;
        builder_.begin_stage(shadow_);
    }

    std::optional<std::size_t> pick(const LatticeBoard& b) override {
        const auto& steps = b.steps();
        for (; synced_ < steps.size(); ++synced_) {
            const Vertex prefix[1] = {static_cast<Vertex>(steps[synced_].pick)};
            shadow_.draw(prefix, static_cast<Color>(steps[synced_].coord));
        }
        const auto e = builder_.next_edge(shadow_);
        if (!e) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(e->front());
    }

private:
    OnlineBuilder& builder_;
    OnlineBoard shadow_;
    std::size_t synced_ = 0;
};

} // namespace

std::unique_ptr<LatticeCoordinator> coordinator_from_painter(OnlinePainter& painter, int q, int n) {
    return std::make_unique<PainterCoordinator>(painter, q, n);
}

std::unique_ptr<OnlinePainter> painter_from_coordinator(LatticeCoordinator& coordinator, int q, int n) {
    return std::make_unique<CoordinatorPainter>(coordinator, q, n);
}

std::unique_ptr<OnlineBuilder> online_builder_from_lattice(LatticeBuilder& builder, int q, int n) {
    return std::make_unique<LatticeDrivenBuilder>(builder, q, n);
}

std::unique_ptr<LatticeBuilder> lattice_builder_from_online(OnlineBuilder& builder, int q, int n) {
    return std::make_unique<OnlineDrivenBuilder>(builder, q, n);
}

} // namespace monopath
