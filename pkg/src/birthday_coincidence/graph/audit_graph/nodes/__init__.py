"""
감사 그래프에서 사용되는 노드 모듈들
"""

from birthday_coincidence.graph.audit_graph.nodes.load_claims import load_claims
from birthday_coincidence.graph.audit_graph.nodes.evaluate_claims import evaluate_claims
from birthday_coincidence.graph.audit_graph.nodes.validate_claims import validate_claims
from birthday_coincidence.graph.audit_graph.nodes.adjudicate_claims import adjudicate_claims
from birthday_coincidence.graph.audit_graph.nodes.return_final_report import return_final_report

__all__ = [
    "load_claims",
    "evaluate_claims",
    "validate_claims",
    "adjudicate_claims",
    "return_final_report"
]
