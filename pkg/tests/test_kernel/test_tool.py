"""条件校验、扩张关系、限制与 amalgamation 单元测试."""

import pytest

from pcfflow.kernel import (
    AmalgamationPreconditionError,
    Condition,
    ConditionShapeError,
    ViolationClause,
    amalgamate,
    empty,
    extension_violations,
    forced_color,
    forced_in_b,
    is_stronger,
    is_valid,
    restrict,
    trace_bound,
    validate,
)
from pcfflow.ordinal import Ordinal, parse

W = Ordinal.omega()


def clauses(violations) -> list[ViolationClause]:
    return [v.clause for v in violations]


class TestConditionShape:
    """Condition 表示合法性测试."""

    def test_empty(self) -> None:
        """测试空条件."""
        p = empty()
        assert p.support == frozenset()
        assert p.bound == 0
        assert validate(p) == []

    def test_color_domain_mismatch(self) -> None:
        """测试 color 定义域与 support 不一致."""
        with pytest.raises(ConditionShapeError, match="定义域"):
            Condition(support=frozenset({W}), color={}, rel=frozenset(), bound=1)

    def test_rel_outside_support(self) -> None:
        """测试 rel 对越出 support."""
        with pytest.raises(ConditionShapeError, match="超出 support"):
            Condition(support=frozenset({W}), color={W: 0}, rel=frozenset({(W, Ordinal.of(1))}), bound=1)

    def test_negative_bound(self) -> None:
        """测试负 bound."""
        with pytest.raises(ConditionShapeError):
            Condition(bound=-1)

    def test_to_dict(self, cond) -> None:
        """测试 JSON 表示按升序排列."""
        p = cond({"w": 0, "2": 1}, [("w", "2")])
        assert p.to_dict() == {
            "support": ["2", "w"],
            "color": {"2": 1, "w": 0},
            "rel1": [["2", "2"], ["w", "2"], ["w", "w"]],
            "bound": 2,
        }
        assert Condition.from_dict(p.to_dict()) == p

    def test_from_dict_missing_field(self) -> None:
        """测试缺少字段."""
        with pytest.raises(ConditionShapeError, match="格式不正确"):
            Condition.from_dict({"support": []})

    def test_from_dict_fractional_bound(self) -> None:
        """测试带小数的 bound 被拒绝而不是截断."""
        with pytest.raises(ConditionShapeError, match="bound"):
            Condition.from_dict({"support": [], "color": {}, "rel1": [], "bound": 1.5})

    def test_from_dict_fractional_color(self) -> None:
        """测试带小数的颜色被拒绝."""
        data = {"support": ["w"], "color": {"w": 0.5}, "rel1": [["w", "w"]], "bound": 1}
        with pytest.raises(ConditionShapeError, match="color"):
            Condition.from_dict(data)

    def test_from_dict_boolean_bound(self) -> None:
        """测试布尔值不被当作整数."""
        with pytest.raises(ConditionShapeError):
            Condition.from_dict({"support": [], "color": {}, "rel1": [], "bound": True})

    def test_from_dict_color_not_object(self) -> None:
        """测试 color 不是对象."""
        with pytest.raises(ConditionShapeError):
            Condition.from_dict({"support": [], "color": [], "rel1": [], "bound": 0})


class TestValidate:
    """validate 测试."""

    def test_order_zero(self, cond) -> None:
        """测试 2 < w 但 rel(2,w)=1."""
        p = cond({"2": 0, "w": 1}, [("2", "w")])
        violations = validate(p)
        assert clauses(violations) == [ViolationClause.ORDER_ZERO]
        assert violations[0].offenders == (parse("2"), W)

    def test_color_clash(self, cond) -> None:
        """测试 rel(w,2)=1 且颜色相同."""
        p = cond({"2": 0, "w": 0}, [("w", "2")], bound=1)
        violations = validate(p)
        assert clauses(violations) == [ViolationClause.COLOR_CLASH]
        assert violations[0].offenders == (W, parse("2"))

    def test_reflexivity(self, cond) -> None:
        """测试缺少自反对."""
        p = cond({"w": 0}, reflexive=False)
        violations = validate(p)
        assert clauses(violations) == [ViolationClause.REFLEXIVITY]
        assert violations[0].offenders == (W,)

    def test_transitivity(self, cond) -> None:
        """测试 rel(3,2)=rel(2,1)=1 但 rel(3,1)=0."""
        p = cond({"1": 0, "2": 1, "3": 2}, [("3", "2"), ("2", "1")])
        violations = validate(p)
        assert clauses(violations) == [ViolationClause.TRANSITIVITY]
        assert violations[0].offenders == (parse("3"), parse("2"), parse("1"))

    def test_color_range(self, cond) -> None:
        """测试颜色不小于 bound."""
        p = cond({"w": 1}, bound=1)
        violations = validate(p)
        assert clauses(violations) == [ViolationClause.COLOR_RANGE]

    def test_valid_condition(self, cond) -> None:
        """测试合法条件."""
        p = cond({"1": 0, "2": 1, "3": 2}, [("3", "2"), ("2", "1"), ("3", "1")])
        assert is_valid(p)

    def test_violation_to_dict(self, cond) -> None:
        """测试 Violation 的 JSON 表示."""
        p = cond({"2": 0, "w": 1}, [("2", "w")])
        data = validate(p)[0].to_dict()
        assert data["clause"] == "order-zero"
        assert data["offenders"] == ["2", "w"]


class TestIsStronger:
    """扩张关系测试."""

    def test_empty_reflexive(self) -> None:
        """测试空条件强于自身."""
        assert is_stronger(empty(), empty())

    def test_reflexive(self, cond) -> None:
        """测试 p 强于自身."""
        p = cond({"2": 1, "w": 0}, [("w", "2")])
        assert is_stronger(p, p)

    def test_stronger_than_restriction(self, cond) -> None:
        """测试 p 强于 p↾η."""
        p = cond({"1": 0, "w": 1, "w+3": 2}, [("w+3", "1")])
        assert is_stronger(p, restrict(p, W))

    def test_clause_v_new_color_too_small(self, cond) -> None:
        """测试新元素颜色小于旧 bound 时子句 (v) 失败."""
        p = cond({"5": 0}, bound=2)
        r = cond({"5": 0, "3": 1}, [("5", "3")], bound=2)
        assert not is_stronger(r, p)
        assert clauses(extension_violations(r, p)) == [ViolationClause.EXTENSION_V]

    def test_clause_v_satisfied(self, cond) -> None:
        """测试新元素颜色不小于旧 bound 时成立."""
        p = cond({"5": 0}, bound=2)
        r = cond({"5": 0, "3": 2}, [("5", "3")], bound=3)
        assert is_stronger(r, p)

    def test_missing_support(self, cond) -> None:
        """测试子句 (i)."""
        p = cond({"5": 0, "w": 1})
        r = cond({"5": 0}, bound=2)
        assert ViolationClause.EXTENSION_I in clauses(extension_violations(r, p))

    def test_rel_changed(self, cond) -> None:
        """测试子句 (ii)：新增旧元素间的 1-对."""
        p = cond({"5": 0, "w": 1})
        r = cond({"5": 0, "w": 1}, [("w", "5")])
        assert clauses(extension_violations(r, p)) == [ViolationClause.EXTENSION_II]

    def test_color_changed(self, cond) -> None:
        """测试子句 (iii)."""
        p = cond({"5": 0})
        r = cond({"5": 1})
        assert clauses(extension_violations(r, p)) == [ViolationClause.EXTENSION_III]

    def test_bound_decreased(self, cond) -> None:
        """测试子句 (iv)."""
        p = cond({"5": 0}, bound=3)
        r = cond({"5": 0}, bound=2)
        assert clauses(extension_violations(r, p)) == [ViolationClause.EXTENSION_IV]


class TestRestrict:
    """restrict 测试."""

    def test_restrict_below_omega(self, cond) -> None:
        """测试 η = w."""
        p = cond({"1": 0, "w": 1, "w+3": 2}, [("w+3", "1")])
        r = restrict(p, W)
        assert r.support == frozenset({Ordinal.of(1)})
        assert r.bound == p.bound
        assert r.rel == frozenset({(Ordinal.of(1), Ordinal.of(1))})

    def test_restrict_zero(self, cond) -> None:
        """测试 η = 0."""
        p = cond({"1": 0, "w": 1})
        r = restrict(p, Ordinal())
        assert r.support == frozenset()
        assert r.bound == p.bound

    def test_restrict_above_support(self, cond) -> None:
        """测试 η 大于全部元素时不变."""
        p = cond({"1": 0, "w": 1}, [("w", "1")])
        assert restrict(p, parse("w^2")) == p


class TestAmalgamate:
    """amalgamate 测试."""

    def test_cross_pair_through_mediator(self, cond) -> None:
        """测试经由 γ=5 得到 rel(w,3)=1."""
        p = cond({"5": 0, "w": 1}, [("w", "5")])
        q = cond({"5": 0, "3": 2}, [("5", "3")], bound=3)
        r = amalgamate(p, q, W)
        assert (W, parse("3")) in r.rel
        assert r.bound == 3
        assert validate(r) == []
        assert is_stronger(r, p) and is_stronger(r, q)
        assert restrict(r, W) == q

    def test_no_mediator(self, cond) -> None:
        """测试没有中介时跨越对为 0."""
        p = cond({"2": 0, "w": 0}, bound=1)
        q = cond({"2": 0, "3": 1}, [("3", "2")], bound=2)
        r = amalgamate(p, q, W)
        assert (W, parse("3")) not in r.rel
        assert validate(r) == []
        assert restrict(r, W) == q

    def test_q_not_below_eta(self, cond) -> None:
        """测试 S_q 不在 η 以下."""
        p = cond({"5": 0})
        q = cond({"5": 0, "w": 1})
        with pytest.raises(AmalgamationPreconditionError, match="越界"):
            amalgamate(p, q, W)

    def test_q_not_stronger(self, cond) -> None:
        """测试 q 不强于 p↾η 时报告失败的子句."""
        p = cond({"5": 0, "w": 1}, [("w", "5")])
        q = cond({"5": 1}, bound=2)
        with pytest.raises(AmalgamationPreconditionError) as exc_info:
            amalgamate(p, q, W)
        assert ViolationClause.EXTENSION_III in clauses(exc_info.value.violations)

    def test_empty_pieces(self) -> None:
        """测试空条件合并."""
        assert amalgamate(empty(), empty(), Ordinal()) == empty()


class TestForcingReadings:
    """forcing 读法测试."""

    def test_forced_in_b(self, cond) -> None:
        """测试 1-对、0-对与 support 外."""
        p = cond({"2": 1, "3": 2, "w": 0}, [("w", "2")])
        assert forced_in_b(p, W, parse("2")) is True
        assert forced_in_b(p, W, parse("3")) is False
        assert forced_in_b(p, W, parse("4")) is None

    def test_forced_color(self, cond) -> None:
        """测试颜色读法."""
        p = cond({"w": 0})
        assert forced_color(p, W) == 0
        assert forced_color(p, parse("w+1")) is None

    def test_trace_bound(self, cond) -> None:
        """测试 u_p > n 时返回 support."""
        p = cond({"2": 1, "w": 0}, [("w", "2")])
        assert trace_bound(p, W, 1) == p.support
        assert trace_bound(p, W, 2) is None
        assert trace_bound(p, parse("w+1"), 0) is None
