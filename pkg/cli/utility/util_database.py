"""
Results store for benchmark runs.

Any SQLAlchemy URL works (sqlite:///bench.db, postgresql://...). The engine is
created on demand by init_engine(); nothing connects at import time.

Provides:
- init_engine / dispose_engine
- get_session(): commit on success, rollback on error, always close
- ensure_table / upsert keyed by a model's __upsert_keys__
"""

import logging
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Generator, Optional

from sqlalchemy import create_engine, select
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker

engine: Optional[Engine] = None
SessionLocal: Optional[sessionmaker] = None
Base = declarative_base()
_ensured: set[str] = set()


def utcnow() -> datetime:
    return datetime.now(timezone.utc).replace(tzinfo=None)


def init_engine(url: str) -> Engine:
    """Bind the module engine and session factory to url."""
    global engine, SessionLocal
    dispose_engine()
    engine = create_engine(url, pool_pre_ping=True)
    SessionLocal = sessionmaker(bind=engine, autoflush=False, expire_on_commit=False)
    logging.info(f"Results store: {engine.url.render_as_string(hide_password=True)}")
    return engine


def dispose_engine() -> None:
    global engine, SessionLocal
    if engine is not None:
        engine.dispose()
    engine = None
    SessionLocal = None
    _ensured.clear()


@contextmanager
def get_session() -> Generator[Session, None, None]:
    if SessionLocal is None:
        raise RuntimeError("Results store not configured. Pass --store or set RANKAGG_RESULTS_DB.")

    session: Session = SessionLocal()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def ensure_table(model_class: type) -> None:
    """Create the model's table once per engine."""
    if engine is None:
        raise RuntimeError("Results store engine not initialized.")
    table = getattr(model_class, "__table__", None)
    if table is None:
        raise ValueError(f"{model_class.__name__} is not a mapped model")
    if table.name not in _ensured:
        table.create(bind=engine, checkfirst=True)
        _ensured.add(table.name)


def upsert(model_class: type, data: dict) -> dict:
    """
    Insert or update one row matched on model_class.__upsert_keys__.

    Fail-safe: returns {"status_code", "message", ...}, never raises.
    None values never overwrite stored columns.
    """
    keys = getattr(model_class, "__upsert_keys__", None)
    if not keys:
        return {"status_code": 500, "message": f"{model_class.__name__} has no __upsert_keys__"}

    missing = [k for k in keys if data.get(k) is None]
    if missing:
        return {"status_code": 400, "message": f"Missing upsert keys: {missing}"}

    values = {k: v for k, v in data.items() if v is not None and hasattr(model_class, k)}
    try:
        ensure_table(model_class)
        with get_session() as session:
            stmt = select(model_class).filter_by(**{k: data[k] for k in keys})
            record = session.scalars(stmt).one_or_none()
            if record is None:
                record = model_class(**values)
                session.add(record)
                action, status = "created", 201
            else:
                for attr, value in values.items():
                    setattr(record, attr, value)
                record.updated_at = utcnow()
                action, status = "updated", 200
            session.flush()
            return {
                "status_code": status,
                "message": f"{model_class.__tablename__} {action}",
                "action": action,
                "record_id": record.id,
            }
    except Exception as e:
        logging.exception(f"Upsert into {model_class.__tablename__} failed: {e}")
        return {"status_code": 500, "message": f"Database error: {e}"}
