from cobweb_lab.reporter.verification_reporter import VerificationReporter

__all__ = ["VerificationReporter"]
