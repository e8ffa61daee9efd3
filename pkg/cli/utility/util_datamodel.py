"""
SQLAlchemy models for the benchmark results store.

Pattern: BaseModel with IdMixin + TimestampMixin.
Models: BenchRun
"""

import json
from datetime import date, datetime
from typing import Any, Dict

from sqlalchemy import DateTime, Integer, String, Text, UniqueConstraint
from sqlalchemy import inspect as sqlalchemy_inspect
from sqlalchemy.orm import Mapped, mapped_column

from .util_database import Base, utcnow


class TimestampMixin:
    created_at: Mapped[datetime] = mapped_column("CreatedAt", DateTime, nullable=False, default=utcnow)
    updated_at: Mapped[datetime | None] = mapped_column("UpdatedAt", DateTime, nullable=True, onupdate=utcnow)


class IdMixin:
    id: Mapped[int] = mapped_column("Id", Integer, primary_key=True, autoincrement=True)


class BaseModel(Base, IdMixin, TimestampMixin):
    __abstract__ = True

    def to_dict(self) -> Dict[str, Any]:
        """Column name -> value; dates as ISO strings."""
        values: Dict[str, Any] = {}
        for column_attr in sqlalchemy_inspect(self.__class__).column_attrs:
            value = getattr(self, column_attr.key)
            if isinstance(value, (datetime, date)):
                value = value.isoformat()
            values[column_attr.columns[0].name] = value
        return values


class BenchRun(BaseModel):
    """One (instance, algorithm, seed) benchmark run."""
    __tablename__ = "BenchRun"
    __table_args__ = (UniqueConstraint("Instance", "Algorithm", "Seed", name="UQ_BenchRun_Run"),)

    __upsert_keys__ = ["instance", "algorithm", "seed"]

    instance: Mapped[str] = mapped_column("Instance", String(255), nullable=False)
    algorithm: Mapped[str] = mapped_column("Algorithm", String(50), nullable=False)
    seed: Mapped[int] = mapped_column("Seed", Integer, nullable=False)
    status: Mapped[str] = mapped_column("Status", String(20), nullable=False, default="ok")
    m: Mapped[int | None] = mapped_column("M", Integer, nullable=True)
    n: Mapped[int | None] = mapped_column("N", Integer, nullable=True)
    fitness: Mapped[str | None] = mapped_column("Fitness", String(32), nullable=True)
    fitness_sum: Mapped[int | None] = mapped_column("FitnessSum", Integer, nullable=True)
    elapsed_ms: Mapped[int | None] = mapped_column("ElapsedMs", Integer, nullable=True)
    time_to_best_ms: Mapped[int | None] = mapped_column("TimeToBestMs", Integer, nullable=True)
    iterations: Mapped[int | None] = mapped_column("Iterations", Integer, nullable=True)
    generations: Mapped[int | None] = mapped_column("Generations", Integer, nullable=True)
    best_ranking: Mapped[str | None] = mapped_column("BestRanking", Text, nullable=True)
    params_json: Mapped[str | None] = mapped_column("ParamsJson", Text, nullable=True)
    error: Mapped[str | None] = mapped_column("Error", Text, nullable=True)

    @property
    def params(self) -> dict:
        return json.loads(self.params_json) if self.params_json else {}

    def __repr__(self) -> str:
        return f"<BenchRun {self.instance!r} {self.algorithm!r} seed={self.seed} fitness={self.fitness!r}>"
