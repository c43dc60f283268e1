from django.dispatch import Signal

# The 'sender' will be the VerificationRun class
# kwargs: 'claim' (claim id), 'n' (wire count), 'witness' (text), 'instance' (replayable JSON data)
claim_failed = Signal()

# The 'sender' will be the VerificationRun class
# kwargs: 'run' (the finished VerificationRun)
verification_finished = Signal()
